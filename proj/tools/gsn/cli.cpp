#include "gsn/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gsn/bivariate.hpp"
#include "gsn/emit.hpp"
#include "gsn/errors.hpp"
#include "gsn/gsn.hpp"
#include "gsn/registry.hpp"
#include "gsn/weyl.hpp"
#include "json.hpp"

namespace gsn::cli {

namespace {

/// Two routes disagreed, or a Weyl check failed.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::optional<std::string> a1, b1, a2, b2;
  std::optional<unsigned> p2;
  std::optional<std::string> a, b;
  std::optional<unsigned> r;
  std::vector<std::string> factors;
  std::vector<std::string> symbolic;
  std::string kind = "gsn";
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--a1", f.a1, "bivariate family: a1");
  cmd->add_option("--b1", f.b1, "bivariate family: b1");
  cmd->add_option("--a2", f.a2, "bivariate family: a2");
  cmd->add_option("--b2", f.b2, "bivariate family: b2");
  cmd->add_option("--p2", f.p2, "bivariate family: p2");
  cmd->add_option("--a", f.a, "general family: a");
  cmd->add_option("--b", f.b, "general family: b");
  cmd->add_option("--r", f.r, "general family: r");
  cmd->add_option("--factor", f.factors, "general family: extra factor alpha,beta,r_s,p_s (repeatable)")
      ->allow_extra_args(false);
  cmd->add_option("--symbolic", f.symbolic, "parameters kept as indeterminates, e.g. a1,b1")->delimiter(',');
  cmd->add_option("--kind", f.kind, "gsn or gen")->check(CLI::IsMember({"gsn", "gen"}));
}

/// Resolved family: either the bivariate S_{a1,b1}^{a2,b2,p2} or the general product.
struct Family {
  bool bivariate = true;
  Coefficients c;
  unsigned p2 = 0;
  ParamSpec general;
  bool gen = false;

  unsigned degree(unsigned p) const { return bivariate ? p + p2 : general.with_p(p).degree(); }
  bool grows() const { return bivariate || general.r() > 0; }
  ParamSpec spec(unsigned p) const { return bivariate ? BivariateParams(c, p, p2).to_param_spec() : general.with_p(p); }

  std::string title() const {
    const std::string letter = gen ? "A" : "S";
    if (bivariate)
      return letter + "_{" + c.a1.to_string() + "," + c.b1.to_string() + "}^{" + c.a2.to_string() + "," +
             c.b2.to_string() + "," + std::to_string(p2) + "}(p,k)";
    std::string t = letter + "_{" + general.a().to_string() + "," + general.b().to_string() + "," +
                    std::to_string(general.r()) + "}";
    if (!general.factors().empty()) {
      t += "^{";
      for (std::size_t i = 0; i < general.factors().size(); ++i) {
        const auto& f = general.factors()[i];
        if (i) t += ";";
        t += f.alpha.to_string() + "," + f.beta.to_string() + "," + std::to_string(f.r) + "," + std::to_string(f.p);
      }
      t += "}";
    }
    return t + "(p,k)";
  }
};

Scalar value_or_symbol(const std::optional<std::string>& text, const std::string& name,
                       const std::vector<std::string>& symbols, Scalar fallback) {
  const bool sym = std::find(symbols.begin(), symbols.end(), name) != symbols.end();
  if (sym && text) throw ParseError("--" + name + " is both given a value and listed in --symbolic");
  if (sym) return Scalar::symbol(name);
  if (text) return Scalar(Rational::parse(*text));
  return fallback;
}

Factor parse_factor(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (parts.size() != 4) throw ParseError("--factor expects alpha,beta,r_s,p_s, got '" + text + "'");
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), parse_unsigned(parts[2], "--factor r_s"),
          parse_unsigned(parts[3], "--factor p_s")};
}

Family resolve_family(const FamilyFlags& f) {
  static const std::vector<std::string> bivariate_names{"a1", "b1", "a2", "b2"};
  static const std::vector<std::string> general_names{"a", "b"};
  const auto listed = [&](const std::vector<std::string>& names) {
    return std::any_of(f.symbolic.begin(), f.symbolic.end(),
                       [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); });
  };
  for (const auto& s : f.symbolic)
    if (std::find(bivariate_names.begin(), bivariate_names.end(), s) == bivariate_names.end() &&
        std::find(general_names.begin(), general_names.end(), s) == general_names.end())
      throw ParseError("--symbolic: unknown parameter '" + s + "' (a1, b1, a2, b2, a, b)");

  const bool biv = f.a1 || f.b1 || f.a2 || f.b2 || f.p2 || listed(bivariate_names);
  const bool gen = f.a || f.b || f.r || !f.factors.empty() || listed(general_names);
  if (biv && gen) throw ParseError("bivariate flags (--a1 ... --p2) and general flags (--a --b --r --factor) are exclusive");

  Family fam;
  fam.gen = f.kind == "gen";
  if (gen) {
    fam.bivariate = false;
    std::vector<Factor> factors;
    for (const auto& t : f.factors) factors.push_back(parse_factor(t));
    fam.general = ParamSpec(value_or_symbol(f.a, "a", f.symbolic, 1), value_or_symbol(f.b, "b", f.symbolic, 0),
                            f.r.value_or(1), 0, std::move(factors));
  } else {
    fam.c = {value_or_symbol(f.a1, "a1", f.symbolic, 1), value_or_symbol(f.b1, "b1", f.symbolic, 0),
             value_or_symbol(f.a2, "a2", f.symbolic, 1), value_or_symbol(f.b2, "b2", f.symbolic, 0)};
    fam.p2 = f.p2.value_or(0);
  }
  return fam;
}

void guard(unsigned degree, const CliConfig& cfg) {
  if (degree > cfg.degree_guard)
    throw DegreeGuardError("degree " + std::to_string(degree) + " exceeds the degree guard " +
                           std::to_string(cfg.degree_guard));
}

NumberTable compute_table(const Family& fam, unsigned last_row) {
  if (fam.gen) {
    NumberTable t = gen_table(fam.spec(0), last_row);
    return t;
  }
  if (fam.bivariate) {
    try {
      return triangle(fam.c, fam.p2, last_row);
    } catch (const std::logic_error& e) {
      throw CheckFailed(e.what());
    }
  }
  NumberTable t = gsn_table(fam.general, last_row, Route::Explicit);
  const NumberTable conv = gsn_table(fam.general, last_row, Route::Conversion);
  if (!(conv.rows == t.rows)) throw CheckFailed("explicit and conversion routes disagree");
  if (fam.general.a() == Scalar(1)) {
    const auto rec = recurrence_51_rows(fam.general.b(), fam.general.r(), last_row, fam.general.factors());
    if (!(rec == t.rows)) throw CheckFailed("explicit formula and the p-recurrence disagree");
  }
  return t;
}

std::string render(const NumberTable& t, const Family& fam, Format format) {
  switch (format) {
    case Format::Csv: return emit_csv(t);
    case Format::Json: return emit_json(t, fam.title());
    case Format::Markdown: return emit_markdown(t, fam.title());
    case Format::Bfile: return emit_bfile(linearize(t, Linearization::Rows, 0, static_cast<std::size_t>(-1)));
    case Format::Text: break;
  }
  throw ParseError("triangle: format must be csv, json, markdown or bfile");
}

/// Last row needed to read `count` terms, or nullopt when the sequence never gets that long.
std::optional<unsigned> rows_needed(const Family& fam, Linearization how, long k0, std::size_t count) {
  if (count == 0) return 0u;
  std::size_t have = 0;
  for (unsigned p = 0;; ++p) {
    const long n = static_cast<long>(fam.degree(p)) + 1;
    if (how == Linearization::Rows)
      have += static_cast<std::size_t>(n);
    else if (k0 < n)
      ++have;
    else if (!fam.grows())
      return std::nullopt;
    if (have >= count) return p;
  }
}

Bounds verify_bounds(Mode mode) { return mode == Mode::Numeric ? Bounds::numeric_defaults() : Bounds::symbolic_defaults(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Generalized Stirling and Eulerian numbers: tables, values and identity checks", "gsn"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> guard_flag;
  std::optional<std::string> config_flag;
  app.add_option("--degree-guard", guard_flag, "cap on r p + sigma (default 64)");
  app.add_option("--config", config_flag, "key=value config file");

  FamilyFlags tri_f, eval_f, bfile_f;
  std::optional<std::string> tri_format, weyl_format, verify_format;

  auto* tri = app.add_subcommand("triangle", "rows p = 0..P of a family");
  add_family_flags(tri, tri_f);
  unsigned rows = 5;
  tri->add_option("--rows", rows, "last row P");
  tri->add_option("--format", tri_format, "csv, json, markdown or bfile");

  auto* ev = app.add_subcommand("eval", "single value S(p,k)");
  add_family_flags(ev, eval_f);
  unsigned eval_p = 0;
  long eval_k = 0;
  ev->add_option("--p,--p1", eval_p, "row p (p1 for the bivariate family)");
  ev->add_option("--k", eval_k, "column k")->required();

  auto* bf = app.add_subcommand("bfile", "export a triangle as an integer sequence");
  add_family_flags(bf, bfile_f);
  std::string lin = "rows";
  std::size_t count = 20;
  long bf_k = 0;
  bf->add_option("--linearization", lin, "rows, column or diagonal");
  bf->add_option("--count", count, "number of terms");
  bf->add_option("--k", bf_k, "column index, or offset from the last entry for diagonal")->check(CLI::NonNegativeNumber);

  auto* vf = app.add_subcommand("verify", "run registered identity checks");
  std::string id = "all", mode_text = "numeric";
  std::optional<std::string> v_b;
  std::optional<unsigned> v_r, max_p, max_degree, max_aux, max_m, points, random_points, threads;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  vf->add_option("--id", id, "identity id or 'all'");
  vf->add_option("--mode", mode_text, "numeric or symbolic");
  vf->add_option("--b", v_b, "restrict the operator identities to this b");
  vf->add_option("--r", v_r, "restrict the operator identities to this r");
  vf->add_option("--max-p", max_p, "bound on p, p1, p2, q1, q2");
  vf->add_option("--max-degree", max_degree, "bound on degree sums");
  vf->add_option("--max-aux", max_aux, "bound on m, t, mu and shift indices");
  vf->add_option("--max-m", max_m, "bound on m in the power sums");
  vf->add_option("--points", points, "deterministic coefficient points");
  vf->add_option("--random-points", random_points, "extra seeded coefficient points");
  vf->add_option("--seed", seed, "seed for the extra points");
  vf->add_option("--threads", threads, "worker threads for --id all");
  vf->add_flag("--timing", timing, "include wall times (reports are then not reproducible)");
  vf->add_option("--format", verify_format, "json or text");

  auto* wf = app.add_subcommand("weyl", "expand the a = 1 operator power and compare with S_{1,b,r}(p,k)");
  std::string w_b = "0";
  unsigned w_r = 1, w_p = 1;
  wf->add_option("--b", w_b, "b (rational, or a name for an indeterminate)");
  wf->add_option("--r", w_r, "r");
  wf->add_option("--p", w_p, "power p");
  wf->add_option("--format", weyl_format, "text or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    const CliConfig cfg = resolve_config(guard_flag, config_flag, env);

    if (tri->parsed()) {
      const Family fam = resolve_family(tri_f);
      const Format format = tri_format ? parse_format(*tri_format) : cfg.format.value_or(Format::Csv);
      guard(fam.degree(rows), cfg);
      out << render(compute_table(fam, rows), fam, format);
      return Ok;
    }

    if (ev->parsed()) {
      const Family fam = resolve_family(eval_f);
      guard(fam.degree(eval_p), cfg);
      const ParamSpec spec = fam.spec(eval_p);
      Scalar v;
      if (fam.gen)
        v = gen_explicit(spec, eval_k);
      else if (fam.bivariate)
        v = gsn2(BivariateParams(fam.c, eval_p, fam.p2), eval_k);
      else
        v = gsn_explicit(spec, eval_k);
      out << v.to_string() << '\n';
      return Ok;
    }

    if (bf->parsed()) {
      const Family fam = resolve_family(bfile_f);
      const Linearization how = parse_linearization(lin);
      const auto last = rows_needed(fam, how, bf_k, count);
      if (!last) throw ParseError("bfile: no row of this family reaches k = " + std::to_string(bf_k));
      guard(fam.degree(*last), cfg);
      out << emit_bfile(linearize(compute_table(fam, *last), how, bf_k, count));
      return Ok;
    }

    if (vf->parsed()) {
      const Mode mode = parse_mode(mode_text);
      Bounds bounds = verify_bounds(mode);
      if (max_p) bounds.max_p = *max_p;
      if (max_degree) bounds.max_degree = *max_degree;
      if (max_aux) bounds.max_aux = *max_aux;
      if (max_m) bounds.max_power_sum_m = *max_m;
      if (points) bounds.param_points = *points;
      if (v_b) bounds.b = Scalar(Rational::parse(*v_b));
      if (v_r) bounds.r = *v_r;
      bounds.seed = seed ? seed : cfg.seed;
      if (random_points) bounds.random_points = *random_points;
      else if (bounds.seed) bounds.random_points = 4;
      const Format format = verify_format ? parse_format(*verify_format) : Format::Json;
      if (format != Format::Json && format != Format::Text) throw ParseError("verify: format must be json or text");

      std::vector<VerifyReport> reports;
      if (id == "all") {
        const unsigned n = threads.value_or(std::max(1u, std::thread::hardware_concurrency()));
        reports = run_all(mode, bounds, cfg.degree_guard, std::max(1u, n));
      } else {
        reports.push_back(run_identity(id, mode, bounds, cfg.degree_guard));
      }
      out << (format == Format::Json ? report_json(reports, timing) : report_text(reports, timing));
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.passed(); });
      return ok ? Ok : VerificationFailed;
    }

    if (wf->parsed()) {
      const Format format = weyl_format ? parse_format(*weyl_format) : Format::Text;
      if (format != Format::Json && format != Format::Text) throw ParseError("weyl: format must be text or json");
      guard(w_r * w_p, cfg);
      Scalar b;
      try {
        b = Scalar(Rational::parse(w_b));
      } catch (const ParseError&) {
        b = Scalar::parse(w_b);
      }
      const WeylWord base = operator_lhs(b, w_r);
      const WeylWord power = weyl_power(base, w_p);
      const auto row = gsn_row(ParamSpec(1, b, w_r, w_p));
      bool ok = power.is_diagonal();
      for (const auto& [key, value] : power.terms()) ok = ok && key.first < row.size();
      for (std::size_t k = 0; k < row.size(); ++k) ok = ok && power.coefficient(k, k) == row[k];
      if (format == Format::Json) {
        nlohmann::ordered_json doc{{"b", b.to_string()},
                                   {"r", w_r},
                                   {"p", w_p},
                                   {"operator", base.to_string()},
                                   {"power", power.to_string()},
                                   {"diagonal", power.is_diagonal()},
                                   {"status", ok ? "pass" : "fail"}};
        out << doc.dump(2) << '\n';
      } else {
        out << "operator: " << base.to_string() << '\n' << "power " << w_p << ": " << power.to_string() << '\n';
        out << "k,coefficient,S_{1,b,r}(p,k)\n";
        for (std::size_t k = 0; k < row.size(); ++k)
          out << k << ',' << power.coefficient(k, k).to_string() << ',' << row[k].to_string() << '\n';
        out << (ok ? "PASS" : "FAIL") << '\n';
      }
      return ok ? Ok : VerificationFailed;
    }
  } catch (const DegreeGuardError& e) {
    err << "gsn: " << e.what() << '\n';
    return DegreeGuard;
  } catch (const CheckFailed& e) {
    err << "gsn: check failed: " << e.what() << '\n';
    return VerificationFailed;
  } catch (const UnknownIdentity& e) {
    err << "gsn: " << e.what() << '\n';
    return UsageError;
  } catch (const NonIntegerValue& e) {
    err << "gsn: " << e.what() << '\n';
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "gsn: " << e.what() << '\n';
    return UsageError;
  } catch (const std::out_of_range& e) {
    err << "gsn: " << e.what() << '\n';
    return UsageError;
  } catch (const std::exception& e) {
    err << "gsn: error: " << e.what() << '\n';
    return VerificationFailed;
  }
  return UsageError;
}

}  // namespace gsn::cli
