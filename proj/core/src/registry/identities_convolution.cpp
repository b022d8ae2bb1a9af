#include "catalog.hpp"

namespace gsn::catalog {

namespace {

Scalar G(const Coefficients& c, unsigned p1, unsigned p2, long k) { return gsn2(BivariateParams(c, p1, p2), k); }

unsigned cap(const DriverContext& ctx, unsigned n) { return std::min(ctx.bounds.max_p, n); }

/// Index tuples of the convolution identities: every index <= 3 (capped by max_p);
/// symbolic mode adds every tuple with indices <= max_p and total <= max_degree.
unsigned index_cap(const DriverContext& ctx) { return symbolic(ctx) ? std::max(ctx.bounds.max_p, cap(ctx, 3)) : cap(ctx, 3); }

bool tuple_ok(const DriverContext& ctx, std::initializer_list<unsigned> idx) {
  const unsigned small = cap(ctx, 3);
  if (std::all_of(idx.begin(), idx.end(), [&](unsigned i) { return i <= small; })) return true;
  unsigned total = 0;
  for (unsigned i : idx) total += i;
  return symbolic(ctx) && total <= ctx.bounds.max_degree;
}

std::string index_label(const DriverContext& ctx, const char* names) {
  std::string label = std::string(names) + " <= " + std::to_string(cap(ctx, 3));
  if (symbolic(ctx))
    label += ", plus totals <= " + std::to_string(ctx.bounds.max_degree) + " with indices <= " +
             std::to_string(index_cap(ctx));
  return label;
}

std::string eq322(const DriverContext& ctx, CaseSink& sink) {
  const unsigned P = index_cap(ctx);
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p2 = 0; p2 <= P; ++p2)
      for (unsigned q1 = 0; q1 <= P; ++q1)
        for (unsigned q2 = 0; q2 <= P; ++q2)
          if (tuple_ok(ctx, {p2, q1, q2}))
            for (long l = 0; l <= p2 + q1 + q2; ++l)
              sink.check(G(c, p2, q1 + q2, l), lemma4_rhs(c, p2, q1, q2, l),
                         [&] { return c.describe() + " " + kv({{"p2", p2}, {"q1", q1}, {"q2", q2}, {"l", l}}); });
  return grid_label(ctx, index_label(ctx, "p2,q1,q2") + ", l = 0..p2+q1+q2");
}

std::string eq323(const DriverContext& ctx, CaseSink& sink) {
  const unsigned P = index_cap(ctx);
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p1 = 0; p1 <= P; ++p1)
      for (unsigned p2 = 0; p2 <= P; ++p2)
        for (unsigned q1 = 0; q1 <= P; ++q1)
          for (unsigned q2 = 0; q2 <= P; ++q2)
            if (tuple_ok(ctx, {p1, p2, q1, q2}))
              for (long l = 0; l <= p1 + p2 + q1 + q2; ++l)
                sink.check(G(c, p1 + p2, q1 + q2, l), convolution_q(c, p1, p2, q1, q2, l), [&] {
                  return c.describe() + " " + kv({{"p1", p1}, {"p2", p2}, {"q1", q1}, {"q2", q2}, {"l", l}});
                });
  return grid_label(ctx, index_label(ctx, "p1,p2,q1,q2") + ", l = 0..p1+p2+q1+q2");
}

std::string eq326(const DriverContext& ctx, CaseSink& sink) {
  const unsigned P = ctx.bounds.max_p;
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p1 = 0; p1 <= P; ++p1)
      for (unsigned p2 = 0; p2 <= P; ++p2)
        for (long l = 0; l <= p1 + p2; ++l) {
          Scalar rhs(0);
          for (long m = 0; m <= p2; ++m) rhs += gsn1(c.a1, c.b1, p2, m) * gsn1(c.a1, c.a1 * Scalar(m) + c.b1, p1, l - m);
          sink.check(gsn1(c.a1, c.b1, p1 + p2, l), rhs, [&] {
            return "a=" + c.a1.to_string() + " b=" + c.b1.to_string() + " " + kv({{"p1", p1}, {"p2", p2}, {"l", l}});
          });
        }
  return grid_label(ctx, "(a,b) = (a1,b1), p1,p2 <= " + std::to_string(P) + ", l = 0..p1+p2");
}

/// Right side of the n-shifted single-parameter convolution.
Scalar eq330_rhs(const Scalar& a, const Scalar& b, long p1, long p2, long l, long n) {
  Scalar sum(0);
  for (long m = 0; m <= p2; ++m) {
    const Scalar outer = gsn1(a, b, static_cast<unsigned>(p2), m);
    if (outer.is_zero()) continue;
    const Scalar base = b - a * Scalar(n - m);
    for (long j1 = 0; j1 <= p1; ++j1) {
      Scalar inner(0);
      for (long t = 0; t <= n - 1; ++t) inner += sgn(t, s1(n, n - t) * S(j1 + n - t, l - m + n));
      sum += B(p1, j1) * pw(a, j1) * pw(base, p1 - j1) * inner * outer;
    }
  }
  return sum;
}

std::string eq330(const DriverContext& ctx, CaseSink& sink) {
  const long P = cap(ctx, 4), N = at_least_one(ctx.bounds.max_aux);
  for (const auto& c : coefficient_points(ctx))
    for (long n = 1; n <= N; ++n)
      for (long p1 = 0; p1 <= P; ++p1)
        for (long p2 = 0; p2 <= P; ++p2)
          for (long l = 0; l <= p1 + p2; ++l)
            sink.check(gsn1(c.a1, c.b1, static_cast<unsigned>(p1 + p2), l), eq330_rhs(c.a1, c.b1, p1, p2, l, n), [&] {
              return "a=" + c.a1.to_string() + " b=" + c.b1.to_string() + " " +
                     kv({{"n", n}, {"p1", p1}, {"p2", p2}, {"l", l}});
            });
  // Displayed particular cases.
  for (long p1 = 0; p1 <= P; ++p1)
    for (long p2 = 0; p2 <= P; ++p2)
      for (long l = 0; l <= p1 + p2 + 1; ++l) {
        Scalar n1(0), n2(0), m1(0), m2(0);
        for (long m = 0; m <= p2; ++m)
          for (long j = 0; j <= p1; ++j) {
            const Scalar w = B(p1, j);
            n1 += w * pw(Scalar(m - 1), p1 - j) * S(j + 1, l - m + 1) * S(p2, m);
            n2 += w * pw(Scalar(m - 2), p1 - j) * (S(j + 2, l - m + 2) - S(j + 1, l - m + 2)) * S(p2, m);
            m1 += w * pw(Scalar(m), p1 - j) * S(j + 1, l - m + 1) * S(p2 + 1, m + 1);
            m2 += w * pw(Scalar(m - 1), p1 - j) * (S(j + 2, l - m + 2) - S(j + 1, l - m + 2)) * S(p2 + 1, m + 1);
          }
        auto at = [&](long line) { return "display " + kv({{"line", line}, {"p1", p1}, {"p2", p2}, {"l", l}}); };
        sink.check(S(p1 + p2, l), n1, [&] { return at(1); });
        sink.check(S(p1 + p2, l), n2, [&] { return at(2); });
        sink.check(S(p1 + p2 + 1, l + 1), m1, [&] { return at(3); });
        sink.check(S(p1 + p2 + 1, l + 1), m2, [&] { return at(4); });
      }
  return grid_label(ctx, "(a,b) = (a1,b1), n = 1.." + std::to_string(N) + ", p1,p2 <= " + std::to_string(P) +
                             "; displayed cases");
}

std::string eq336(const DriverContext& ctx, CaseSink& sink) {
  const unsigned P = ctx.bounds.max_p;
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p = 0; p <= P; ++p)
      for (unsigned q = 0; q <= P; ++q)
        for (long k = 0; k <= p + q; ++k) {
          const auto [lhs, rhs] = claim_plus_one(c.a1, c.b1, q, p, k);
          sink.check(lhs, rhs, [&] {
            return "a=" + c.a1.to_string() + " b=" + c.b1.to_string() + " " + kv({{"p", p}, {"q", q}, {"k", k}});
          });
        }
  return grid_label(ctx, "(a,b) = (a1,b1), p,q <= " + std::to_string(P) + ", k = 0..p+q");
}

std::string eq342(const DriverContext& ctx, CaseSink& sink) {
  const unsigned P = symbolic(ctx) ? 1 : cap(ctx, 2);
  const unsigned total = std::min(ctx.bounds.max_degree, 6u);
  std::size_t tuples = 0;
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p1 = 0; p1 <= P; ++p1)
      for (unsigned p2 = 0; p2 <= P; ++p2)
        for (unsigned p3 = 0; p3 <= P; ++p3)
          for (unsigned q1 = 0; q1 <= P; ++q1)
            for (unsigned q2 = 0; q2 <= P; ++q2)
              for (unsigned q3 = 0; q3 <= P; ++q3) {
                const unsigned deg = p1 + p2 + p3 + q1 + q2 + q3;
                if (deg > total) continue;
                ++tuples;
                const TripleIndices idx{p1, p2, p3, q1, q2, q3};
                for (long l = 0; l <= deg; ++l)
                  sink.check(G(c, p1 + p2 + p3, q1 + q2 + q3, l), convolution_triple(c, idx, l), [&] {
                    return c.describe() + " " +
                           kv({{"p1", p1}, {"p2", p2}, {"p3", p3}, {"q1", q1}, {"q2", q2}, {"q3", q3}, {"l", l}});
                  });
              }
  return grid_label(ctx, "indices <= " + std::to_string(P) + ", total <= " + std::to_string(total) + ", l = 0..total");
}

std::string eq343(const DriverContext& ctx, CaseSink& sink) {
  const unsigned P = cap(ctx, 3), M = at_least_one(ctx.bounds.max_power_sum_m);
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p1 = 0; p1 <= P; ++p1)
      for (unsigned p2 = 0; p2 <= P; ++p2) {
        const BivariateParams bp(c, p1, p2);
        for (unsigned m = 1; m <= M; ++m)
          for (long k = 0; k < m; ++k) {
            const auto [lhs, rhs] = power_sum(bp, m, k);
            sink.check(lhs, rhs, [&] { return c.describe() + " " + kv({{"p1", p1}, {"p2", p2}, {"m", m}, {"k", k}}); });
          }
      }
  return grid_label(ctx, "p1,p2 <= " + std::to_string(P) + ", m = 1.." + std::to_string(M) + ", k = 0..m-1");
}

std::string eq344(const DriverContext& ctx, CaseSink& sink) {
  const Bounds& b = ctx.bounds;
  for (const auto& c : coefficient_points(ctx))
    for (unsigned p1 = 0; p1 <= b.max_p; ++p1)
      for (unsigned p2 = 0; p2 <= b.max_p && p1 + p2 <= b.max_degree; ++p2) {
        const BivariateParams bp(c, p1, p2);
        for (unsigned k = 0; k <= b.max_p; ++k)
          for (unsigned mu = 0; mu <= b.max_aux; ++mu) {
            const auto [lhs, rhs] = vandermonde_convolution(bp, k, mu);
            sink.check(lhs, rhs,
                       [&] { return c.describe() + " " + kv({{"p1", p1}, {"p2", p2}, {"k", k}, {"mu", mu}}); });
          }
      }
  return grid_label(ctx, "p1,p2 <= " + std::to_string(b.max_p) + ", k <= " + std::to_string(b.max_p) +
                             ", mu <= " + std::to_string(b.max_aux));
}

IdentityCheck both(std::string id, std::string description, std::vector<std::string> arity, Driver d) {
  return {std::move(id), std::move(description), std::move(arity), true, true, std::move(d)};
}

}  // namespace

void add_convolution(std::vector<IdentityCheck>& out) {
  out.push_back(both("EQ-3.22", "convolution splitting q1+q2", {"p2", "q1", "q2", "l"}, eq322));
  out.push_back(both("EQ-3.23", "convolution splitting p1+p2 and q1+q2", {"p1", "p2", "q1", "q2", "l"}, eq323));
  out.push_back(both("EQ-3.26", "single-parameter convolution", {"p1", "p2", "l"}, eq326));
  out.push_back(both("EQ-3.30", "single-parameter convolution, n-shifted", {"p1", "p2", "l", "n"}, eq330));
  out.push_back(both("EQ-3.36", "S_{a,b}^{a,b+1,q} as a binomial sum", {"p", "q", "k"}, eq336));
  out.push_back(both("EQ-3.42", "three-term convolution", {"p1", "p2", "p3", "q1", "q2", "q3", "l"}, eq342));
  out.push_back(both("EQ-3.43", "weighted sums of powers", {"p1", "p2", "m", "k"}, eq343));
  out.push_back(both("EQ-3.44", "convolution in k + mu", {"p1", "p2", "k", "mu"}, eq344));
}

}  // namespace gsn::catalog
