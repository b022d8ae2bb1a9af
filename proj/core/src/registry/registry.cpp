#include "gsn/registry.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "catalog.hpp"
#include "gsn/errors.hpp"
#include "gsn/grid.hpp"

namespace gsn {

std::string_view to_string(Mode mode) { return mode == Mode::Numeric ? "numeric" : "symbolic"; }

Mode parse_mode(std::string_view text) {
  if (text == "numeric") return Mode::Numeric;
  if (text == "symbolic") return Mode::Symbolic;
  throw std::invalid_argument("unknown mode: " + std::string(text));
}

Bounds Bounds::symbolic_defaults() {
  Bounds b;
  b.max_p = 6;
  b.max_degree = 6;
  b.max_aux = 2;
  b.max_power_sum_m = 4;
  b.param_points = 1;
  return b;
}

Bounds Bounds::zero() {
  Bounds b;
  b.max_p = 0;
  b.max_degree = 0;
  b.max_aux = 0;
  b.max_power_sum_m = 0;
  b.param_points = 0;
  return b;
}

unsigned Bounds::required_degree() const {
  // The operator identities build r p + sigma with r <= 3 and a factor of degree <= 2.
  return std::max(max_degree, r.value_or(3) * max_p + 2);
}

std::string Bounds::describe() const {
  std::ostringstream os;
  os << "max_p=" << max_p << " max_degree=" << max_degree << " max_aux=" << max_aux
     << " max_power_sum_m=" << max_power_sum_m << " param_points=" << param_points;
  if (b) os << " b=" << *b;
  if (r) os << " r=" << *r;
  if (seed) os << " seed=" << *seed << " random_points=" << random_points;
  return os.str();
}

void CaseSink::check(const Scalar& lhs, const Scalar& rhs, const std::function<std::string()>& assignment) {
  ++cases_;
  if (!(lhs == rhs)) failures_.push_back({assignment(), lhs.to_string(), rhs.to_string()});
}

void CaseSink::check(bool ok, const std::function<std::string()>& assignment) {
  ++cases_;
  if (!ok) failures_.push_back({assignment(), "false", "true"});
}

namespace catalog {

std::vector<Coefficients> coefficient_points(const DriverContext& ctx) {
  if (symbolic(ctx)) return {Coefficients::symbolic()};
  return grid::bivariate(std::max(1u, ctx.bounds.param_points), ctx.bounds.seed, ctx.bounds.random_points);
}

std::vector<Target> transform_targets(const DriverContext& ctx) {
  if (!symbolic(ctx)) return grid::targets();
  return {Target::standard(),
          {Scalar(2), Scalar::symbol("d1"), Scalar(Rational(1, 2)), Scalar::symbol("d2")},
          {Scalar(-1), Scalar::symbol("d1"), Scalar(3), Scalar::symbol("d2")}};
}

std::vector<Scalar> weyl_b_values(const DriverContext& ctx) {
  if (ctx.bounds.b) return {*ctx.bounds.b};
  if (symbolic(ctx)) return {Scalar::symbol("b")};
  return {Scalar(0), Scalar(1), Scalar(2), Scalar(Rational(1, 2)), Scalar(-1)};
}

std::vector<unsigned> weyl_r_values(const DriverContext& ctx) {
  if (ctx.bounds.r) return {*ctx.bounds.r};
  return {0, 1, 2, 3};
}

std::string grid_label(const DriverContext& ctx, const std::string& ranges) {
  std::ostringstream os;
  if (symbolic(ctx))
    os << "indeterminates; ";
  else
    os << coefficient_points(ctx).size() << " coefficient points; ";
  os << ranges;
  return os.str();
}

std::string kv(std::initializer_list<std::pair<const char*, long>> values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, v] : values) {
    if (!first) os << ' ';
    first = false;
    os << name << '=' << v;
  }
  return os.str();
}

}  // namespace catalog

namespace {

const std::vector<std::string>& catalog_order() {
  static const std::vector<std::string> order{
      "EQ-2.16",  "EQ-2.19",   "EQ-2.21",     "EQ-2.24",     "EQ-3.2a", "EQ-3.2b", "EQ-3.2c", "EQ-3.2d",
      "EQ-3.3",   "EQ-3.5",    "EQ-3.6",      "EQ-3.7",      "EQ-3.71", "EQ-3.8",  "EQ-3.81", "EQ-3.9",
      "EQ-3.11",  "EQ-3.13",   "EQ-3.14",     "EQ-3.15",     "EQ-3.151", "EQ-3.153", "EQ-3.16", "EQ-3.17",
      "EQ-3.18",  "EQ-3.19",   "EQ-3.20",     "EQ-3.21",     "EQ-3.22", "EQ-3.23", "EQ-3.26", "EQ-3.27",
      "EQ-3.28",  "EQ-3.281",  "EQ-3.30",     "EQ-3.34",     "EQ-3.36", "EQ-3.39", "EQ-3.401", "EQ-3.41",
      "EQ-3.42",  "EQ-3.43",   "EQ-3.43-EX1", "EQ-3.43-EX2", "EQ-3.44", "EQ-5.1",  "EQ-5.2",
  };
  return order;
}

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> all;
  catalog::add_general(all);
  catalog::add_bivariate(all);
  catalog::add_stirling(all);
  catalog::add_convolution(all);
  catalog::add_weyl(all);

  std::map<std::string, IdentityCheck> by_id;
  for (auto& c : all) {
    const std::string id = c.id;
    if (!by_id.emplace(id, std::move(c)).second) throw std::logic_error("duplicate identity " + id);
  }
  std::vector<IdentityCheck> ordered;
  for (const auto& id : catalog_order()) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw std::logic_error("identity " + id + " has no driver");
    ordered.push_back(std::move(it->second));
    by_id.erase(it);
  }
  if (!by_id.empty()) throw std::logic_error("identity " + by_id.begin()->first + " is not in the catalog order");
  return ordered;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build_registry();
  return checks;
}

const IdentityCheck* find_identity(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

void check_guard(const Bounds& bounds, unsigned degree_guard) {
  if (bounds.required_degree() > degree_guard)
    throw DegreeGuardError("bounds need degree " + std::to_string(bounds.required_degree()) +
                           ", degree guard is " + std::to_string(degree_guard));
}

VerifyReport run_check(const IdentityCheck& check, Mode mode, const Bounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  CaseSink sink;
  const DriverContext ctx{mode, bounds};
  VerifyReport report;
  report.id = check.id;
  report.mode = mode;
  try {
    report.grid = check.driver(ctx, sink);
  } catch (const std::exception& e) {
    sink.failures().push_back({"driver aborted", e.what(), ""});
  }
  report.cases = sink.cases();
  report.failures = std::move(sink.failures());
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace

VerifyReport run_identity(std::string_view id, Mode mode, const Bounds& bounds, unsigned degree_guard) {
  const IdentityCheck* check = find_identity(id);
  if (!check) throw UnknownIdentity("unknown identity: " + std::string(id));
  check_guard(bounds, degree_guard);
  if (!check->supports(mode))
    throw std::invalid_argument(std::string(id) + " has no " + std::string(to_string(mode)) + " driver");
  return run_check(*check, mode, bounds);
}

std::vector<VerifyReport> run_all(Mode mode, const Bounds& bounds, unsigned degree_guard, unsigned threads) {
  check_guard(bounds, degree_guard);
  std::vector<const IdentityCheck*> selected;
  for (const auto& c : registry())
    if (c.supports(mode)) selected.push_back(&c);

  std::vector<VerifyReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) reports[i] = run_check(*selected[i], mode, bounds);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(selected.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return reports;
}

}  // namespace gsn
