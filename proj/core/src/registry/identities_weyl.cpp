#include "catalog.hpp"
#include "gsn/gsn.hpp"
#include "gsn/weyl.hpp"

namespace gsn::catalog {

namespace {

Scalar at(const std::vector<Scalar>& row, long k) {
  return k < 0 || k >= static_cast<long>(row.size()) ? Scalar(0) : row[static_cast<std::size_t>(k)];
}

/// Largest p <= max_p with r p + sigma within the required degree, or -1 when none fits.
long last_row(const Bounds& b, unsigned r, unsigned sigma) {
  long p = b.max_p;
  while (p >= 0 && r * p + sigma > b.required_degree()) --p;
  return p;
}

std::string eq51(const DriverContext& ctx, CaseSink& sink) {
  const std::vector<std::vector<Factor>> shapes{{}, {{1, 0, 1, 1}}, {{Rational(1, 2), 3, 2, 1}}};
  const auto bs = weyl_b_values(ctx);
  const auto rs = weyl_r_values(ctx);
  for (const auto& b : bs)
    for (unsigned r : rs)
      for (std::size_t f = 0; f < shapes.size(); ++f) {
        const auto& factors = shapes[f];
        unsigned sigma = 0;
        for (const auto& fac : factors) sigma += fac.degree();
        const long last = last_row(ctx.bounds, r, sigma);
        if (last < 0) continue;
        const auto rows = recurrence_51_rows(b, r, static_cast<unsigned>(last), factors);
        for (long p = 0; p <= last; ++p) {
          const ParamSpec spec(1, b, r, static_cast<unsigned>(p), factors);
          const auto direct = gsn_row(spec);
          const long deg = spec.degree();
          auto where = [&](long k) { return spec.describe() + " " + kv({{"k", k}}); };
          for (long k = 0; k <= deg; ++k) {
            sink.check(at(rows[static_cast<std::size_t>(p)], k), at(direct, k), [&] { return where(k); });
            if (p > 0)
              sink.check(recurrence_51(b, r, static_cast<unsigned>(p), k, factors), at(direct, k),
                         [&] { return "single value " + where(k); });
          }
        }
      }
  return std::to_string(bs.size()) + " b values, r in " + std::to_string(rs.size()) + " values, " +
         std::to_string(shapes.size()) + " factor shapes; p <= " + std::to_string(ctx.bounds.max_p) +
         ", degree <= " + std::to_string(ctx.bounds.required_degree());
}

std::string eq52(const DriverContext& ctx, CaseSink& sink) {
  const auto bs = weyl_b_values(ctx);
  const auto rs = weyl_r_values(ctx);
  for (const auto& b : bs)
    for (unsigned r : rs) {
      const long last = last_row(ctx.bounds, r, 0);
      const WeylWord base = operator_lhs(b, r);
      WeylWord power = WeylWord::identity();
      for (long p = 0; p <= last; ++p) {
        if (p > 0) power = power * base;
        const ParamSpec spec(1, b, r, static_cast<unsigned>(p));
        const auto direct = gsn_row(spec);
        auto where = [&] { return spec.describe(); };
        sink.check(power.is_diagonal(), [&] { return "off-diagonal term " + where(); });
        sink.check(power == weyl_power(base, static_cast<unsigned>(p)) || p == 0,
                   [&] { return "power mismatch " + where(); });
        for (long k = 0; k <= static_cast<long>(r) * p; ++k)
          sink.check(power.coefficient(static_cast<unsigned>(k), static_cast<unsigned>(k)), at(direct, k),
                     [&] { return where() + " " + kv({{"k", k}}); });
        for (const auto& [key, value] : power.terms())
          if (key.first != key.second || key.first > r * p)
            sink.check(false, [&] { return "unexpected term x^" + std::to_string(key.first) + " D^" +
                                           std::to_string(key.second) + " " + where(); });
      }
    }
  return std::to_string(bs.size()) + " b values, r in " + std::to_string(rs.size()) + " values, p <= " +
         std::to_string(ctx.bounds.max_p) + ", r p <= " + std::to_string(ctx.bounds.required_degree());
}

}  // namespace

void add_weyl(std::vector<IdentityCheck>& out) {
  out.push_back({"EQ-5.1", "recurrence in p for the a = 1 family", {"b", "r", "p", "k"}, true, true, eq51});
  out.push_back({"EQ-5.2", "p-th power of the normal-ordered operator", {"b", "r", "p", "k"}, true, true, eq52});
}

}  // namespace gsn::catalog
