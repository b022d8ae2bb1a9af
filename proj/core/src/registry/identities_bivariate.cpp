#include <functional>

#include "catalog.hpp"

namespace gsn::catalog {

namespace {

Scalar G(const Scalar& a1, const Scalar& b1, const Scalar& a2, const Scalar& b2, unsigned p1, unsigned p2, long k) {
  return gsn2(BivariateParams(a1, b1, a2, b2, p1, p2), k);
}
Scalar G(const Coefficients& c, unsigned p1, unsigned p2, long k) { return gsn2(BivariateParams(c, p1, p2), k); }

using PairBody = std::function<void(const Coefficients&, unsigned p1, unsigned p2)>;

/// Every coefficient point and every (p1, p2) with p1, p2 <= max_p and p1 + p2 <= max_degree.
void for_pairs(const DriverContext& ctx, const PairBody& body) {
  const Bounds& b = ctx.bounds;
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p1 = 0; p1 <= b.max_p; ++p1)
      for (unsigned p2 = 0; p2 <= b.max_p && p1 + p2 <= std::max(b.max_degree, 0u); ++p2) body(c, p1, p2);
}

std::string pair_ranges(const DriverContext& ctx, const std::string& extra = "") {
  return grid_label(ctx, "p1,p2 <= " + std::to_string(ctx.bounds.max_p) + ", p1+p2 <= " +
                             std::to_string(ctx.bounds.max_degree) + ", k = 0..p1+p2" + extra);
}

std::string where(const Coefficients& c, std::initializer_list<std::pair<const char*, long>> values) {
  return c.describe() + " " + kv(values);
}

// --- symmetry, merge and reductions -------------------------------------

std::string eq32a(const DriverContext& ctx, CaseSink& sink) {
  for (const auto& c : coefficient_points(ctx)) {
    const unsigned top = 2 * ctx.bounds.max_p;
    const auto rows = gsn2_recurrence_rows({c.a1, c.b1, 1, 0}, 0, top);
    for (unsigned p1 = 0; p1 <= ctx.bounds.max_p; ++p1)
      for (unsigned p2 = 0; p2 <= ctx.bounds.max_p && p1 + p2 <= ctx.bounds.max_degree; ++p2)
        for (long k = 0; k <= p1 + p2; ++k)
          sink.check(G(c.a1, c.b1, c.a1, c.b1, p1, p2, k), rows[p1 + p2][k],
                     [&] { return where(c, {{"p1", p1}, {"p2", p2}, {"k", k}}); });
  }
  return pair_ranges(ctx, "; a2=a1, b2=b1");
}

std::string eq32b(const DriverContext& ctx, CaseSink& sink) {
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p1 = 0; p1 <= ctx.bounds.max_p; ++p1)
      for (unsigned p2 = 0; p2 <= ctx.bounds.max_degree; ++p2)
        sink.check(G(c, 0, p2, 0), pw(c.b2, p2), [&] { return where(c, {{"p2", p2}}); });
  return grid_label(ctx, "p2 <= " + std::to_string(ctx.bounds.max_degree));
}

std::string eq32c(const DriverContext& ctx, CaseSink& sink) {
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    for (long k = 0; k <= p1 + p2; ++k)
      sink.check(G(c, p1, p2, k), G(c.a2, c.b2, c.a1, c.b1, p2, p1, k),
                 [&] { return where(c, {{"p1", p1}, {"p2", p2}, {"k", k}}); });
  });
  return pair_ranges(ctx);
}

std::string eq32d(const DriverContext& ctx, CaseSink& sink) {
  for (const auto& c : coefficient_points(ctx)) {
    const auto rows = gsn2_recurrence_rows({c.a2, c.b2, 1, 0}, 0, ctx.bounds.max_degree);
    for (unsigned p2 = 0; p2 <= ctx.bounds.max_degree; ++p2)
      for (long k = 0; k <= p2; ++k)
        sink.check(G(c, 0, p2, k), rows[p2][k], [&] { return where(c, {{"p2", p2}, {"k", k}}); });
  }
  return grid_label(ctx, "p1 = 0, p2 <= " + std::to_string(ctx.bounds.max_degree));
}

// --- classical shifts and the recurrence ---------------------------------

std::string eq33(const DriverContext& ctx, CaseSink& sink) {
  const long top = 2 * ctx.bounds.max_p + 2;
  for (long p = 0; p <= top; ++p)
    for (long k = 0; k <= p + 2; ++k) {
      sink.check(gsn1(1, 1, p, k), S(p + 1, k + 1), [&] { return "S_{1,1} " + kv({{"p", p}, {"k", k}}); });
      sink.check(gsn1(1, 2, p, k), S(p + 2, k + 2) - S(p + 1, k + 2),
                 [&] { return "S_{1,2} " + kv({{"p", p}, {"k", k}}); });
    }
  return "p <= " + std::to_string(top) + ", k = 0..p+2";
}

std::string eq35(const DriverContext& ctx, CaseSink& sink) {
  const Bounds& b = ctx.bounds;
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p2 = 0; p2 <= b.max_p; ++p2) {
      if (p2 > b.max_degree) break;
      const unsigned last = std::min(b.max_p, b.max_degree - p2);
      const auto rows = gsn2_recurrence_rows(c, p2, last);
      for (unsigned p1 = 0; p1 <= last; ++p1)
        for (long k = 0; k <= p1 + p2; ++k)
          sink.check(rows[p1][k], G(c, p1, p2, k), [&] { return where(c, {{"p1", p1}, {"p2", p2}, {"k", k}}); });
    }
  return pair_ranges(ctx, "; recurrence rows against explicit formula");
}

// --- change of parameters --------------------------------------------------

std::string eq36(const DriverContext& ctx, CaseSink& sink) {
  const auto targets = transform_targets(ctx);
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    const BivariateParams bp(c, p1, p2);
    for (std::size_t ti = 0; ti < targets.size(); ++ti)
      for (long k = 0; k <= p1 + p2; ++k)
        sink.check(transform_params(bp, targets[ti], k), gsn2(bp, k), [&] {
          return where(c, {{"p1", p1}, {"p2", p2}, {"k", k}, {"target", static_cast<long>(ti)}});
        });
  });
  return pair_ranges(ctx, "; " + std::to_string(targets.size()) + " targets (c1,d1,c2,d2)");
}

std::string eq37(const DriverContext& ctx, CaseSink& sink) {
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    const BivariateParams bp(c, p1, p2);
    for (long k = 0; k <= p1 + p2; ++k)
      sink.check(m_shift_representation(bp, 0, k), gsn2(bp, k),
                 [&] { return where(c, {{"p1", p1}, {"p2", p2}, {"k", k}}); });
  });
  return pair_ranges(ctx);
}

std::string eq371(const DriverContext& ctx, CaseSink& sink) {
  for (const auto& c : coefficient_points(ctx))
    for (long p = 0; p <= ctx.bounds.max_degree; ++p)
      for (long k = 0; k <= p; ++k) {
        Scalar rhs(0);
        for (long j = 0; j <= p; ++j) rhs += B(p, j) * pw(c.a1, j) * pw(c.b1, p - j) * S(j, k);
        sink.check(gsn1(c.a1, c.b1, static_cast<unsigned>(p), k), rhs,
                   [&] { return "a=" + c.a1.to_string() + " b=" + c.b1.to_string() + " " + kv({{"p", p}, {"k", k}}); });
      }
  return grid_label(ctx, "(a,b) = (a1,b1), p <= " + std::to_string(ctx.bounds.max_degree));
}

/// Targets for the inverse formulas: fixed targets plus (numeric) every point with c1, c2 != 0.
std::vector<Target> inverse_targets(const DriverContext& ctx) {
  auto targets = transform_targets(ctx);
  if (!symbolic(ctx))
    for (const auto& c : coefficient_points(ctx))
      if (!c.a1.is_zero() && !c.a2.is_zero()) targets.push_back({c.a1, c.b1, c.a2, c.b2});
  return targets;
}

std::string eq38(const DriverContext& ctx, CaseSink& sink) {
  const auto targets = inverse_targets(ctx);
  const Bounds& b = ctx.bounds;
  for (std::size_t ti = 0; ti < targets.size(); ++ti)
    for (unsigned p1 = 0; p1 <= b.max_p; ++p1)
      for (unsigned p2 = 0; p2 <= b.max_p && p1 + p2 <= b.max_degree; ++p2)
        for (long k = 0; k <= p1 + p2; ++k)
          sink.check(S(p1 + p2, k), transform_params(BivariateParams(1, 0, 1, 0, p1, p2), targets[ti], k), [&] {
            return kv({{"target", static_cast<long>(ti)}, {"p1", p1}, {"p2", p2}, {"k", k}});
          });
  return std::to_string(targets.size()) + " targets; p1,p2 <= " + std::to_string(b.max_p) + ", p1+p2 <= " +
         std::to_string(b.max_degree);
}

std::string eq381(const DriverContext& ctx, CaseSink& sink) {
  std::vector<std::pair<Scalar, Scalar>> cds;
  for (const auto& t : inverse_targets(ctx)) cds.emplace_back(t.c1, t.d1);
  for (std::size_t i = 0; i < cds.size(); ++i) {
    const auto& [cc, d] = cds[i];
    const Scalar c_inv = cc.inverse();
    for (long p = 0; p <= ctx.bounds.max_degree; ++p)
      for (long k = 0; k <= p; ++k) {
        Scalar rhs(0);
        for (long j = 0; j <= p; ++j) rhs += B(p, j) * pw(-d, p - j) * gsn1(cc, d, static_cast<unsigned>(j), k);
        sink.check(S(p, k), pw(c_inv, p) * rhs, [&] {
          return "c=" + cc.to_string() + " d=" + d.to_string() + " " + kv({{"p", p}, {"k", k}});
        });
      }
  }
  return std::to_string(cds.size()) + " (c,d) pairs; p <= " + std::to_string(ctx.bounds.max_degree);
}

std::string eq39(const DriverContext& ctx, CaseSink& sink) {
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    const BivariateParams bp(c, p1, p2);
    for (long k = 0; k <= p1 + p2; ++k)
      sink.check(G(c.a1, c.a1 + c.b1, c.a2, c.a2 + c.b2, p1, p2, k), shift_b(bp, k),
                 [&] { return where(c, {{"p1", p1}, {"p2", p2}, {"k", k}}); });
  });
  return pair_ranges(ctx);
}

std::string eq311(const DriverContext& ctx, CaseSink& sink) {
  const auto targets = transform_targets(ctx);
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    const BivariateParams bp(c, p1, p2);
    for (unsigned m = 0; m <= ctx.bounds.max_aux; ++m)
      for (std::size_t ti = 0; ti < targets.size(); ++ti)
        for (long k = 0; k <= p1 + p2; ++k)
          sink.check(shifted_expansion_factorial(bp, targets[ti], m, k), fact(k) * gsn2(bp, k), [&] {
            return where(c, {{"p1", p1}, {"p2", p2}, {"m", m}, {"target", static_cast<long>(ti)}, {"k", k}});
          });
  });
  return pair_ranges(ctx, "; m <= " + std::to_string(ctx.bounds.max_aux) + "; " + std::to_string(targets.size()) +
                              " targets");
}

std::string eq313(const DriverContext& ctx, CaseSink& sink) {
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    const BivariateParams bp(c, p1, p2);
    for (unsigned m = 0; m <= ctx.bounds.max_aux; ++m)
      for (long k = 0; k <= p1 + p2; ++k)
        sink.check(shifted_expansion_standard(bp, m, k), fact(k) * gsn2(bp, k),
                   [&] { return where(c, {{"p1", p1}, {"p2", p2}, {"m", m}, {"k", k}}); });
  });
  return pair_ranges(ctx, "; m <= " + std::to_string(ctx.bounds.max_aux));
}

std::string eq315(const DriverContext& ctx, CaseSink& sink) {
  const unsigned top = at_least_one(ctx.bounds.max_aux);
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    const BivariateParams bp(c, p1, p2);
    for (unsigned m = 1; m <= top; ++m)
      for (long k = 0; k <= p1 + p2; ++k)
        sink.check(m_shift_representation(bp, m, k), gsn2(bp, k),
                   [&] { return where(c, {{"p1", p1}, {"p2", p2}, {"m", m}, {"k", k}}); });
  });
  return pair_ranges(ctx, "; m = 1.." + std::to_string(top));
}

// The three displayed forms (m = 0, 1, 2), written out independently.
std::string eq316(const DriverContext& ctx, CaseSink& sink) {
  for_pairs(ctx, [&](const Coefficients& c, unsigned p1, unsigned p2) {
    const BivariateParams bp(c, p1, p2);
    for (long k = 0; k <= p1 + p2; ++k) {
      Scalar m0(0), m1(0), m2(0);
      for (long j1 = 0; j1 <= p1; ++j1)
        for (long j2 = 0; j2 <= p2; ++j2) {
          const Scalar w = B(p1, j1) * B(p2, j2) * pw(c.a1, j1) * pw(c.a2, j2);
          const long u1 = p1 - j1, u2 = p2 - j2, j = j1 + j2;
          m0 += w * pw(c.b1, u1) * pw(c.b2, u2) * S(j, k);
          m1 += w * pw(c.b1 - c.a1, u1) * pw(c.b2 - c.a2, u2) * S(j + 1, k + 1);
          m2 += w * pw(c.b1 - Scalar(2) * c.a1, u1) * pw(c.b2 - Scalar(2) * c.a2, u2) *
                (S(j + 2, k + 2) - S(j + 1, k + 2));
        }
      const Scalar direct = gsn2(bp, k);
      auto at = [&](long m) { return where(c, {{"p1", p1}, {"p2", p2}, {"k", k}, {"m", m}}); };
      sink.check(m0, direct, [&] { return at(0); });
      sink.check(m1, direct, [&] { return at(1); });
      sink.check(m2, direct, [&] { return at(2); });
    }
  });
  return pair_ranges(ctx, "; forms m = 0, 1, 2");
}

// --- fixed-parameter families ----------------------------------------------

using Form = std::function<Scalar(long p1, long p2, long k)>;

std::string fixed_family(const DriverContext& ctx, CaseSink& sink, const Coefficients& c,
                         const std::vector<Form>& forms) {
  const Bounds& b = ctx.bounds;
  for (long p1 = 0; p1 <= b.max_p; ++p1)
    for (long p2 = 0; p2 <= b.max_p && p1 + p2 <= b.max_degree; ++p2)
      for (long k = 0; k <= p1 + p2; ++k) {
        const Scalar direct = G(c, static_cast<unsigned>(p1), static_cast<unsigned>(p2), k);
        for (std::size_t f = 0; f < forms.size(); ++f)
          sink.check(forms[f](p1, p2, k), direct,
                     [&] { return kv({{"p1", p1}, {"p2", p2}, {"k", k}, {"line", static_cast<long>(f + 1)}}); });
      }
  return c.describe() + "; p1,p2 <= " + std::to_string(b.max_p) + ", p1+p2 <= " + std::to_string(b.max_degree);
}

std::string eq317(const DriverContext& ctx, CaseSink& sink) {
  return fixed_family(ctx, sink, {1, 1, 1, 0},
                      {
                          [](long p1, long p2, long k) {
                            Scalar s(0);
                            for (long j = 0; j <= p1; ++j) s += B(p1, j) * S(j + p2, k);
                            return s;
                          },
                          [](long p1, long p2, long k) {
                            Scalar s(0);
                            for (long j = 0; j <= p2; ++j) s += B(p2, j) * sgn(p2 - j, S(p1 + j + 1, k + 1));
                            return s;
                          },
                          [](long p1, long p2, long k) {
                            Scalar s(0);
                            for (long j1 = 0; j1 <= p1; ++j1)
                              for (long j2 = 0; j2 <= p2; ++j2)
                                s += B(p1, j1) * B(p2, j2) * pw(-1, p1 - j1) * pw(-2, p2 - j2) *
                                     (S(j1 + j2 + 2, k + 2) - S(j1 + j2 + 1, k + 2));
                            return s;
                          },
                      });
}

std::string eq318(const DriverContext& ctx, CaseSink& sink) {
  return fixed_family(ctx, sink, {1, 2, 1, 0},
                      {
                          [](long p1, long p2, long k) {
                            Scalar s(0);
                            for (long j = 0; j <= p1; ++j) s += B(p1, j) * pw(2, p1 - j) * S(j + p2, k);
                            return s;
                          },
                          [](long p1, long p2, long k) {
                            Scalar s(0);
                            for (long j1 = 0; j1 <= p1; ++j1)
                              for (long j2 = 0; j2 <= p2; ++j2)
                                s += B(p1, j1) * B(p2, j2) * sgn(p2 - j2, S(j1 + j2 + 1, k + 1));
                            return s;
                          },
                          [](long p1, long p2, long k) {
                            Scalar s(0);
                            for (long j = 0; j <= p2; ++j)
                              s += B(p2, j) * pw(-2, p2 - j) * (S(p1 + j + 2, k + 2) - S(p1 + j + 1, k + 2));
                            return s;
                          },
                      });
}

std::string eq319(const DriverContext& ctx, CaseSink& sink) {
  std::string label = fixed_family(ctx, sink, {1, 1, 1, 2},
                                   {
                                       [](long p1, long p2, long k) {
                                         Scalar s(0);
                                         for (long j1 = 0; j1 <= p1; ++j1)
                                           for (long j2 = 0; j2 <= p2; ++j2)
                                             s += B(p1, j1) * B(p2, j2) * pw(2, p2 - j2) * S(j1 + j2, k);
                                         return s;
                                       },
                                       [](long p1, long p2, long k) {
                                         Scalar s(0);
                                         for (long j = 0; j <= p2; ++j) s += B(p2, j) * S(p1 + j + 1, k + 1);
                                         return s;
                                       },
                                       [](long p1, long p2, long k) {
                                         Scalar s(0);
                                         for (long j = 0; j <= p1; ++j)
                                           s += B(p1, j) * sgn(p1 - j, S(j + p2 + 2, k + 2) - S(j + p2 + 1, k + 2));
                                         return s;
                                       },
                                   });
  // Cross-triangle remark: S_{1,2}^{1,1,1}(p,k) = S_{1,1}^{1,0,2}(p,k+1).
  const long top = ctx.bounds.max_p + 3;
  for (long p = 0; p <= top; ++p)
    for (long k = -1; k <= p + 2; ++k)
      sink.check(G(1, 2, 1, 1, static_cast<unsigned>(p), 1, k), G(1, 1, 1, 0, static_cast<unsigned>(p), 2, k + 1),
                 [&] { return "cross-triangle " + kv({{"p", p}, {"k", k}}); });
  return label + "; cross-triangle p <= " + std::to_string(top);
}

std::string eq320(const DriverContext& ctx, CaseSink& sink) {
  const Bounds& b = ctx.bounds;
  for (long p1 = 0; p1 <= b.max_p; ++p1)
    for (long p2 = 0; p2 <= b.max_p && p1 + p2 <= b.max_degree; ++p2)
      for (long k = 0; k <= p1 + p2; ++k) {
        const auto u1 = static_cast<unsigned>(p1), u2 = static_cast<unsigned>(p2);
        const Scalar lhs = G(1, 1, 1, 0, u1, u2, k);
        Scalar line1(0), line2(0), line3(0);
        for (long j1 = 0; j1 <= p1; ++j1)
          line1 += B(p1, j1) * sgn(p1 - j1, G(1, 2, 1, 0, static_cast<unsigned>(j1), u2, k));
        for (long j2 = 0; j2 <= p2; ++j2)
          line2 += B(p2, j2) * pw(-2, p2 - j2) * G(1, 1, 1, 2, u1, static_cast<unsigned>(j2), k);
        for (long j1 = 0; j1 <= p1; ++j1)
          for (long j2 = 0; j2 <= p2; ++j2)
            line3 += B(p1, j1) * B(p2, j2) * pw(-2, p2 - j2) *
                     G(1, 1, 1, 2, static_cast<unsigned>(j1), static_cast<unsigned>(j2), k);
        auto at = [&](long line) { return kv({{"p1", p1}, {"p2", p2}, {"k", k}, {"line", line}}); };
        sink.check(lhs, line1, [&] { return at(1); });
        sink.check(lhs, line2, [&] { return at(2); });
        sink.check(G(1, 2, 1, 0, u1, u2, k), line3, [&] { return at(3); });
      }
  return "p1,p2 <= " + std::to_string(b.max_p) + ", p1+p2 <= " + std::to_string(b.max_degree) +
         "; second line summed with superscript j2";
}

std::string eq321(const DriverContext& ctx, CaseSink& sink) {
  const long P = ctx.bounds.max_p;
  for (long p = 0; p <= P; ++p)
    for (long q = 0; q <= P; ++q)
      for (long k = 0; k <= p + q + 2; ++k) {
        Scalar lhs(0), mid(0), right(0), lhs2(0), right2(0);
        for (long j = 0; j <= p; ++j) lhs += B(p, j) * S(q + j, k);
        for (long l = 0; l <= p; ++l)
          for (long j = 0; j <= l; ++j) mid += B(p, l) * B(l, j) * pw(-1, p - l) * pw(2, l - j) * S(q + j, k);
        for (long l = 0; l <= q; ++l)
          for (long j = 0; j <= l; ++j) right += B(q, l) * B(l, j) * pw(-2, q - l) * S(p + j + 1, k + 1);
        for (long j = 0; j <= p; ++j) lhs2 += B(p, j) * pw(2, p - j) * S(q + j, k);
        for (long j = 0; j <= p; ++j)
          for (long i = 0; i <= q; ++i)
            for (long l = 0; l <= i; ++l) right2 += B(p, j) * B(q, i) * B(i, l) * pw(-2, q - i) * S(j + l + 1, k + 1);
        auto at = [&](long line) { return kv({{"p", p}, {"q", q}, {"k", k}, {"line", line}}); };
        sink.check(lhs, mid, [&] { return at(1); });
        sink.check(lhs, right, [&] { return at(2); });
        sink.check(lhs2, right2, [&] { return at(3); });
      }
  return "p,q <= " + std::to_string(P) + ", k = 0..p+q+2";
}

IdentityCheck make(std::string id, std::string description, std::vector<std::string> arity, bool sym, Driver d) {
  return {std::move(id), std::move(description), std::move(arity), true, sym, std::move(d)};
}

}  // namespace

void add_bivariate(std::vector<IdentityCheck>& out) {
  out.push_back(make("EQ-3.2a", "equal parameter pairs merge into S_{a,b}(p1+p2,k)", {"p1", "p2", "k"}, true, eq32a));
  out.push_back(make("EQ-3.2b", "S(0,0) = b2^p2", {"p2"}, true, eq32b));
  out.push_back(make("EQ-3.2c", "symmetry under swapping the two factors", {"p1", "p2", "k"}, true, eq32c));
  out.push_back(make("EQ-3.2d", "S(0,k) = S_{a2,b2}(p2,k)", {"p2", "k"}, true, eq32d));
  out.push_back(make("EQ-3.3", "S_{1,1} and S_{1,2} through classical numbers", {"p", "k"}, false, eq33));
  out.push_back(make("EQ-3.5", "recurrence in p1", {"p1", "p2", "k"}, true, eq35));
  out.push_back(make("EQ-3.6", "change of parameters (c1,d1,c2,d2)", {"p1", "p2", "k"}, true, eq36));
  out.push_back(make("EQ-3.7", "expansion in classical numbers", {"p1", "p2", "k"}, true, eq37));
  out.push_back(make("EQ-3.71", "S_{a,b}(p,k) in classical numbers", {"p", "k"}, true, eq371));
  out.push_back(make("EQ-3.8", "classical numbers through S_{c1,d1}^{c2,d2}", {"p1", "p2", "k"}, true, eq38));
  out.push_back(make("EQ-3.81", "classical numbers through S_{c,d}", {"p", "k"}, true, eq381));
  out.push_back(make("EQ-3.9", "shift of b1, b2 by a1, a2", {"p1", "p2", "k"}, true, eq39));
  out.push_back(make("EQ-3.11", "m-shifted change of parameters", {"p1", "p2", "m", "k"}, true, eq311));
  out.push_back(make("EQ-3.13", "m-shifted expansion in classical numbers", {"p1", "p2", "m", "k"}, true, eq313));
  out.push_back(make("EQ-3.15", "expansion through first-kind numbers", {"p1", "p2", "m", "k"}, true, eq315));
  out.push_back(make("EQ-3.16", "the m = 0, 1, 2 expansions", {"p1", "p2", "k"}, true, eq316));
  out.push_back(make("EQ-3.17", "S_{1,1}^{1,0,p2} three ways", {"p1", "p2", "k"}, false, eq317));
  out.push_back(make("EQ-3.18", "S_{1,2}^{1,0,p2} three ways", {"p1", "p2", "k"}, false, eq318));
  out.push_back(make("EQ-3.19", "S_{1,1}^{1,2,p2} three ways, cross-triangle remark", {"p1", "p2", "k"}, false,
                     eq319));
  out.push_back(make("EQ-3.20", "relations among the three fixed families", {"p1", "p2", "k"}, false, eq320));
  out.push_back(make("EQ-3.21", "the relations in classical numbers", {"p", "q", "k"}, false, eq321));
}

}  // namespace gsn::catalog
