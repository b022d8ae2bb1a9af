#include <sstream>

#include "catalog.hpp"
#include "gsn/gsn.hpp"
#include "gsn/grid.hpp"

namespace gsn::catalog {

namespace {

std::vector<ParamSpec> families(const DriverContext& ctx) {
  const Bounds& b = ctx.bounds;
  std::vector<ParamSpec> out;
  if (!symbolic(ctx)) {
    for (auto& ps : grid::general(b.seed, b.random_points))
      if (ps.degree() <= b.max_degree && ps.p() <= b.max_p) out.push_back(std::move(ps));
    if (out.empty()) out.push_back(ParamSpec::standard(0));
    return out;
  }
  const Scalar a1 = Scalar::symbol("a1"), b1 = Scalar::symbol("b1");
  const Scalar a2 = Scalar::symbol("a2"), b2 = Scalar::symbol("b2");
  out.emplace_back(a1, b1, 1, 0);
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned p = 0; p <= b.max_p; ++p)
      for (unsigned r2 = 1; r2 <= 2; ++r2)
        for (unsigned p2 = 0; p2 <= b.max_p; ++p2) {
          if (r * p + r2 * p2 > b.max_degree || (p == 0 && p2 == 0)) continue;
          out.emplace_back(a1, b1, r, p, std::vector<Factor>{{a2, b2, r2, p2}});
        }
  return out;
}

std::string family_label(const DriverContext& ctx, const std::vector<ParamSpec>& fams, const std::string& extra) {
  std::ostringstream os;
  os << fams.size() << (symbolic(ctx) ? " symbolic" : "") << " families with rp+sigma <= " << ctx.bounds.max_degree
     << ", p <= " << ctx.bounds.max_p << extra;
  return os.str();
}

std::string eq216(const DriverContext& ctx, CaseSink& sink) {
  const auto fams = families(ctx);
  for (const auto& ps : fams) {
    const long d = ps.degree();
    const auto gsn = gsn_row(ps);
    const Scalar inv_scale(ps.scale().inverse());
    for (long n = 0; n <= d; ++n) {
      Scalar rhs(0);
      for (long k = 0; k <= d; ++k) rhs += fact(k) * B(n, k) * gsn[k];
      sink.check(product_value(ps, Scalar(n)), rhs * inv_scale, [&] { return ps.describe() + " n=" + std::to_string(n); });
    }
  }
  return family_label(ctx, fams, "; n = 0..rp+sigma");
}

std::string eq219(const DriverContext& ctx, CaseSink& sink) {
  const auto fams = families(ctx);
  for (const auto& ps : fams) {
    const auto gen = gen_row(ps);
    std::vector<Scalar> ascending(gen.rbegin(), gen.rend());
    const auto shifted = rebase_z_to_zm1(std::span<const Scalar>(ascending));
    const auto expected = gep_zm1_from_gsn(ps);
    const std::size_t d = ps.degree();
    for (std::size_t k = 0; k <= d; ++k)
      sink.check(shifted[d - k], expected[k], [&] { return ps.describe() + " k=" + std::to_string(k); });
  }
  return family_label(ctx, fams, "; every (z-1) coefficient");
}

std::string eq221(const DriverContext& ctx, CaseSink& sink) {
  const auto fams = families(ctx);
  for (const auto& ps : fams) {
    const auto gen = gen_row(ps);
    const auto gsn = gsn_row(ps);
    const auto converted = convert_gen_to_gsn(ps, gen);
    const auto back = convert_gen_to_gsn(ps, convert_gsn_to_gen(ps, gsn));
    for (std::size_t k = 0; k < gsn.size(); ++k) {
      sink.check(converted[k], gsn[k], [&] { return ps.describe() + " k=" + std::to_string(k); });
      sink.check(back[k], gsn[k], [&] { return ps.describe() + " roundtrip k=" + std::to_string(k); });
    }
  }
  const long top = 2 * ctx.bounds.max_p;
  for (long p = 0; p <= top; ++p)
    for (long k = 0; k <= p; ++k) {
      Scalar sum(0);
      for (long i = 0; i <= p; ++i) sum += B(p - i, p - k) * Scalar(eulerian(p, i));
      sink.check(sum / fact(k), S(p, k), [&] { return "classical " + kv({{"p", p}, {"k", k}}); });
    }
  return family_label(ctx, fams, "; roundtrip; classical case p <= " + std::to_string(top));
}

std::string eq224(const DriverContext& ctx, CaseSink& sink) {
  const auto fams = families(ctx);
  for (const auto& ps : fams) {
    const auto gen = gen_row(ps);
    const auto gsn = gsn_row(ps);
    const auto converted = convert_gsn_to_gen(ps, gsn);
    const auto back = convert_gsn_to_gen(ps, convert_gen_to_gsn(ps, gen));
    for (std::size_t i = 0; i < gen.size(); ++i) {
      sink.check(converted[i], gen[i], [&] { return ps.describe() + " i=" + std::to_string(i); });
      sink.check(back[i], gen[i], [&] { return ps.describe() + " roundtrip i=" + std::to_string(i); });
    }
  }
  const long top = 2 * ctx.bounds.max_p;
  for (long p = 0; p <= top; ++p)
    for (long i = 0; i <= p; ++i) {
      Scalar sum(0);
      for (long k = 0; k <= p; ++k) sum += sgn(k, B(p - k, p - i) * fact(k) * S(p, k));
      sink.check(sgn(i, sum), Scalar(eulerian(p, i)), [&] { return "classical " + kv({{"p", p}, {"i", i}}); });
    }
  return family_label(ctx, fams, "; roundtrip; classical case p <= " + std::to_string(top));
}

}  // namespace

void add_general(std::vector<IdentityCheck>& out) {
  out.push_back({"EQ-2.16", "product expands in the binomial basis with coefficients k! S(p,k) / scale",
                 {"params", "n"}, true, true, eq216});
  out.push_back({"EQ-2.19", "GEP in powers of (z-1) has coefficients k! S(p,k) / scale", {"params", "k"}, true,
                 true, eq219});
  out.push_back({"EQ-2.21", "GSN from GEN", {"params", "k"}, true, true, eq221});
  out.push_back({"EQ-2.24", "GEN from GSN", {"params", "i"}, true, true, eq224});
}

}  // namespace gsn::catalog
