#include "catalog.hpp"

namespace gsn::catalog {

namespace {

Rational Sr(long p, long k) { return stirling2(p, k); }
Rational sr(long p, long k) { return stirling1_unsigned(p, k); }
Rational Br(long n, long k) { return binom_int(n, k); }
Rational ipow(long base, long e) { return e < 0 ? Rational(0) : Rational(base).pow(static_cast<unsigned>(e)); }
Rational sign(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

std::string upto(const char* name, long n) { return std::string(name) + " <= " + std::to_string(n); }

std::string eq314(const DriverContext& ctx, CaseSink& sink) {
  const long J = ctx.bounds.max_degree, M = ctx.bounds.max_aux + 1;
  for (long m = 1; m <= M; ++m)
    for (long j = 0; j <= J; ++j)
      for (long k = 0; k <= j; ++k) {
        const auto [lhs, rhs] = lemma3_lhs_rhs(static_cast<unsigned>(j), static_cast<unsigned>(k),
                                                static_cast<unsigned>(m));
        sink.check(lhs, rhs, [&] { return kv({{"j", j}, {"k", k}, {"m", m}}); });
      }
  return upto("j", J) + ", k = 0..j, m = 1.." + std::to_string(M);
}

std::string eq3151(const DriverContext& ctx, CaseSink& sink) {
  const long M = ctx.bounds.max_aux + 1, P = ctx.bounds.max_p + 3;
  for (long m = 1; m <= M; ++m)
    for (long p = 0; p <= P; ++p)
      for (long k = 0; k <= p; ++k)
        sink.check(s1m_representation(static_cast<unsigned>(m), p, k), gsn1(1, m, static_cast<unsigned>(p), k),
                   [&] { return kv({{"m", m}, {"p", p}, {"k", k}}); });
  for (long p = 0; p <= P; ++p)
    for (long k = 0; k <= p; ++k) {
      const auto u = static_cast<unsigned>(p);
      sink.check(gsn1(1, 3, u, k), Sr(p + 3, k + 3) - Rational(3) * Sr(p + 2, k + 3) + Rational(2) * Sr(p + 1, k + 3),
                 [&] { return "m=3 display " + kv({{"p", p}, {"k", k}}); });
      sink.check(gsn1(1, 4, u, k),
                 Sr(p + 4, k + 4) - Rational(6) * Sr(p + 3, k + 4) + Rational(11) * Sr(p + 2, k + 4) -
                     Rational(6) * Sr(p + 1, k + 4),
                 [&] { return "m=4 display " + kv({{"p", p}, {"k", k}}); });
    }
  return "m = 1.." + std::to_string(M) + ", " + upto("p", P) + ", k = 0..p; m = 3, 4 displays";
}

std::string eq3153(const DriverContext& ctx, CaseSink& sink) {
  const long P1 = ctx.bounds.max_p + 2, P2 = ctx.bounds.max_aux + 2;
  for (long p2 = 1; p2 <= P2; ++p2)
    for (long p1 = 0; p1 <= P1; ++p1)
      for (long l = 0; l <= p1 + p2; ++l)
        sink.check(Sr(p1 + p2, l), stirling_recurrence_family(static_cast<unsigned>(p1), static_cast<unsigned>(p2), l),
                   [&] { return kv({{"p1", p1}, {"p2", p2}, {"l", l}}); });
  for (long p1 = 0; p1 <= P1; ++p1)
    for (long l = 0; l <= p1 + 3; ++l) {
      Rational two = Sr(p1 + 1, l), three = Rational(-2) * Sr(p1 + 1, l) + Rational(3) * Sr(p1 + 2, l);
      for (long j = 0; j <= p1; ++j) {
        two += Br(p1, j) * ipow(2, p1 - j) * Sr(j, l - 2);
        three += Br(p1, j) * ipow(3, p1 - j) * Sr(j, l - 3);
      }
      sink.check(Sr(p1 + 2, l), two, [&] { return "p2=2 display " + kv({{"p1", p1}, {"l", l}}); });
      sink.check(Sr(p1 + 3, l), three, [&] { return "p2=3 display " + kv({{"p1", p1}, {"l", l}}); });
    }
  // l = p2 with p1 = 1, 2: second-kind numbers through first-kind ones.
  for (long p2 = 1; p2 <= P2 + 4; ++p2) {
    const Rational s = sr(p2, p2 - 1);
    sink.check(Sr(p2 + 1, p2), s + Rational(p2), [&] { return "l=p2 p1=1 " + kv({{"p2", p2}}); });
    sink.check(Sr(p2 + 2, p2), s * s + Rational(p2) * s - sr(p2, p2 - 2) + Rational(p2 * p2),
               [&] { return "l=p2 p1=2 " + kv({{"p2", p2}}); });
  }
  return "p2 = 1.." + std::to_string(P2) + ", " + upto("p1", P1) + ", l = 0..p1+p2; displayed cases";
}

Rational eq327_rhs(long p1, long p2, long l, long m_last) {
  Rational sum(0);
  for (long m = 0; m <= m_last; ++m)
    for (long j = 0; j <= p1; ++j) sum += Br(p1, j) * ipow(m, p1 - j) * Sr(j, l - m) * Sr(p2, m);
  return sum;
}

std::string eq327(const DriverContext& ctx, CaseSink& sink) {
  const long P = ctx.bounds.max_p + 2;
  for (long p1 = 0; p1 <= P; ++p1)
    for (long p2 = 0; p2 <= P; ++p2)
      for (long l = 0; l <= p1 + p2; ++l)
        sink.check(Sr(p1 + p2, l), eq327_rhs(p1, p2, l, p2), [&] { return kv({{"p1", p1}, {"p2", p2}, {"l", l}}); });
  return upto("p1,p2", P) + ", l = 0..p1+p2";
}

std::string eq328(const DriverContext& ctx, CaseSink& sink) {
  const long P = std::max(8L, static_cast<long>(ctx.bounds.max_degree));
  for (unsigned step : {2u, 3u})
    for (long p = 0; p <= P; ++p)
      for (long l = 0; l <= p + step; ++l) {
        const Rational direct = Sr(p + step, l);
        auto at = [&] { return kv({{"step", step}, {"p", p}, {"l", l}}); };
        sink.check(direct, stirling_iterated(step, p, l), at);
        sink.check(direct, eq327_rhs(static_cast<long>(step), p, l, p), at);
      }
  return "steps 2, 3; " + upto("p", P) + "; iterated recurrence and the convolution form";
}

std::string eq3281(const DriverContext& ctx, CaseSink& sink) {
  const long P1 = ctx.bounds.max_p + 2, P2 = ctx.bounds.max_aux + 3;
  for (long p2 = 1; p2 <= P2; ++p2)
    for (long p1 = 0; p1 <= P1; ++p1)
      for (long l = 0; l <= p1 + p2; ++l) {
        Rational rhs(0);
        for (long k = 1; k <= p2 - 1; ++k) rhs += sign(p2 + k + 1) * sr(p2, k) * Sr(p1 + k, l);
        sink.check(eq327_rhs(p1, p2, l, p2 - 1), rhs, [&] { return kv({{"p1", p1}, {"p2", p2}, {"l", l}}); });
      }
  return "p2 = 1.." + std::to_string(P2) + ", " + upto("p1", P1) + ", l = 0..p1+p2";
}

template <class Body>
void for_quads(long P, Body body) {
  for (long p1 = 0; p1 <= P; ++p1)
    for (long p2 = 0; p2 <= P; ++p2)
      for (long q1 = 0; q1 <= P; ++q1)
        for (long q2 = 0; q2 <= P; ++q2) body(p1, p2, q1, q2);
}

std::string eq334(const DriverContext& ctx, CaseSink& sink) {
  const long P = std::min(2L, static_cast<long>(ctx.bounds.max_p));
  for_quads(P, [&](long p1, long p2, long q1, long q2) {
    const long top = p1 + p2 + q1 + q2;
    for (long l = 0; l <= top; ++l)
      for (long t = 0; t <= top; ++t) {
        const auto [lhs, rhs] = corollary3_identity(static_cast<unsigned>(p1), static_cast<unsigned>(p2),
                                                    static_cast<unsigned>(q1), static_cast<unsigned>(q2), l, t);
        sink.check(lhs, rhs, [&] { return kv({{"p1", p1}, {"p2", p2}, {"q1", q1}, {"q2", q2}, {"l", l}, {"t", t}}); });
      }
  });
  return upto("p1,p2,q1,q2", P) + ", l,t = 0..p1+p2+q1+q2";
}

std::string eq339(const DriverContext& ctx, CaseSink& sink) {
  const long P = ctx.bounds.max_p;
  for (long p1 = 0; p1 <= P; ++p1)
    for (long p2 = 0; p2 <= P; ++p2)
      for (long l = 0; l <= p1 + p2; ++l)
        for (long t = 0; t <= p1 + p2; ++t) {
          Rational rhs(0);
          for (long m = 0; m <= p2; ++m)
            for (long k = 0; k <= p1; ++k)
              for (long s = 0; s <= k; ++s)
                rhs += Br(p1, k) * Br(p2, t - s) * Br(k, s) * ipow(m, k - s) * Sr(p2 - t + s, m) * Sr(p1 - k, l - m);
          sink.check(Br(p1 + p2, t) * Sr(p1 + p2 - t, l), rhs,
                     [&] { return kv({{"p1", p1}, {"p2", p2}, {"l", l}, {"t", t}}); });
        }
  return upto("p1,p2", P) + ", l,t = 0..p1+p2";
}

std::string eq3401(const DriverContext& ctx, CaseSink& sink) {
  const long P = std::min(2L, static_cast<long>(ctx.bounds.max_p));
  for_quads(P, [&](long p1, long p2, long q1, long q2) {
    for (long l = 0; l <= p1 + p2 + q1 + q2; ++l) {
      Rational lhs(0);
      for (long r = 0; r <= q1 + q2; ++r) lhs += Br(p1 + p2 + r, r) * Br(q1 + q2, r) * Sr(r, l);
      Rational rhs(0);
      for (long m = 0; m <= p2 + q2; ++m)
        for (long r1 = 0; r1 <= q1; ++r1)
          for (long r2 = 0; r2 <= q2; ++r2)
            for (long k = 0; k <= p1 + r1; ++k)
              for (long s = 0; s <= k; ++s)
                rhs += Br(q1, r1) * Br(q2, r2) * Br(p1 + r1, k) * Br(p2 + r2, p1 + p2 - s) * Br(k, s) *
                       ipow(m, k - s) * Sr(r2 - p1 + s, m) * Sr(p1 + r1 - k, l - m);
      sink.check(lhs, rhs, [&] { return kv({{"p1", p1}, {"p2", p2}, {"q1", q1}, {"q2", q2}, {"l", l}}); });
    }
  });
  return upto("p1,p2,q1,q2", P) + ", l = 0..p1+p2+q1+q2";
}

std::string eq341(const DriverContext& ctx, CaseSink& sink) {
  const long P = ctx.bounds.max_p;
  for_quads(P, [&](long p1, long p2, long q1, long q2) {
    const auto [lhs, rhs] = binomial_identity(static_cast<unsigned>(p1), static_cast<unsigned>(p2),
                                              static_cast<unsigned>(q1), static_cast<unsigned>(q2));
    sink.check(lhs, rhs, [&] { return kv({{"p1", p1}, {"p2", p2}, {"q1", q1}, {"q2", q2}}); });
  });
  return upto("p1,p2,q1,q2", P);
}

/// Both displayed sums-of-powers examples, verbatim and as instances of the general statement.
std::string power_example(const DriverContext& ctx, CaseSink& sink, int which) {
  const long M = at_least_one(ctx.bounds.max_power_sum_m);
  // Example 1: (m - t)(t - m - 1)^2; example 2: (m - t)^3.
  for (long m = 1; m <= M; ++m) {
    const BivariateParams bp = which == 1 ? BivariateParams(-1, m, 1, -m - 1, 1, 2) : BivariateParams(-1, m, 1, 0, 3, 0);
    for (long k = 0; k < m; ++k) {
      const auto u = static_cast<unsigned>(m);
      const auto [lhs, rhs] = which == 1 ? power_sum_example_1(u, k) : power_sum_example_2(u, k);
      sink.check(lhs, rhs, [&] { return "display " + kv({{"m", m}, {"k", k}}); });
      const auto [gl, gr] = power_sum(bp, u, k);
      sink.check(gl, gr, [&] { return "general " + kv({{"m", m}, {"k", k}}); });
      sink.check(gr, Scalar(lhs), [&] { return "general matches display " + kv({{"m", m}, {"k", k}}); });
    }
  }
  return "m = 1.." + std::to_string(M) + ", k = 0..m-1";
}

std::string ex1(const DriverContext& ctx, CaseSink& sink) { return power_example(ctx, sink, 1); }
std::string ex2(const DriverContext& ctx, CaseSink& sink) { return power_example(ctx, sink, 2); }

IdentityCheck numeric_only(std::string id, std::string description, std::vector<std::string> arity, Driver d) {
  return {std::move(id), std::move(description), std::move(arity), true, false, std::move(d)};
}

}  // namespace

void add_stirling(std::vector<IdentityCheck>& out) {
  out.push_back(numeric_only("EQ-3.14", "factorial-weighted sums through first-kind numbers", {"j", "k", "m"}, eq314));
  out.push_back(numeric_only("EQ-3.151", "S_{1,m} through first-kind numbers", {"m", "p", "k"}, eq3151));
  out.push_back(numeric_only("EQ-3.153", "recurrence for S(p1+p2, l)", {"p1", "p2", "l"}, eq3153));
  out.push_back(numeric_only("EQ-3.27", "S(p1+p2, l) as a convolution", {"p1", "p2", "l"}, eq327));
  out.push_back(numeric_only("EQ-3.28", "iterations of the standard recurrence", {"p", "l"}, eq328));
  out.push_back(numeric_only("EQ-3.281", "convolution against first-kind sum", {"p1", "p2", "l"}, eq3281));
  out.push_back(numeric_only("EQ-3.34", "binomially weighted convolution", {"p1", "p2", "q1", "q2", "l", "t"}, eq334));
  out.push_back(numeric_only("EQ-3.39", "the q1 = q2 = 0 case", {"p1", "p2", "l", "t"}, eq339));
  out.push_back(numeric_only("EQ-3.401", "the t = p1+p2 case", {"p1", "p2", "q1", "q2", "l"}, eq3401));
  out.push_back(numeric_only("EQ-3.41", "binomial identity at l = 1", {"p1", "p2", "q1", "q2"}, eq341));
  out.push_back(numeric_only("EQ-3.43-EX1", "sum of (m-t)(t-m-1)^2", {"m", "k"}, ex1));
  out.push_back(numeric_only("EQ-3.43-EX2", "sum of (m-t)^3", {"m", "k"}, ex2));
}

}  // namespace gsn::catalog
