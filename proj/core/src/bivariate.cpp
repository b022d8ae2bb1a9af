#include "gsn/bivariate.hpp"

#include <stdexcept>
#include <string>

#include "gsn/classic.hpp"
#include "gsn/exact.hpp"

namespace gsn {

namespace {

Scalar sgn(long e, Scalar v) { return e % 2 == 0 ? v : -v; }
Scalar B(long n, long k) { return Scalar(binom_int(n, k)); }
Scalar S(long p, long k) { return Scalar(stirling2(p, k)); }
Scalar s1(long p, long k) { return Scalar(stirling1_unsigned(p, k)); }
Scalar fact(long n) { return Scalar(factorial(static_cast<unsigned>(n))); }
Scalar pw(const Scalar& x, long e) { return power_scalar(x, static_cast<unsigned>(e)); }

Scalar explicit_value(const Scalar& a1, const Scalar& b1, const Scalar& a2, const Scalar& b2, unsigned p1,
                      unsigned p2, long k) {
  if (k < 0 || k > static_cast<long>(p1 + p2)) return Scalar(0);
  Scalar sum(0);
  for (long j = 0; j <= k; ++j) {
    const Scalar x(k - j);
    sum += sgn(j, B(k, j) * pw(a1 * x + b1, p1) * pw(a2 * x + b2, p2));
  }
  return sum / fact(k);
}

Scalar G(const Coefficients& c, unsigned p1, unsigned p2, long k) {
  return explicit_value(c.a1, c.b1, c.a2, c.b2, p1, p2, k);
}

Scalar at(const std::vector<Scalar>& row, long k) {
  if (k < 0 || k >= static_cast<long>(row.size())) return Scalar(0);
  return row[static_cast<std::size_t>(k)];
}

/// One step of a S(p-1, k-1) + (a k + b) S(p-1, k).
std::vector<Scalar> recurrence_step(const std::vector<Scalar>& prev, const Scalar& a, const Scalar& b) {
  std::vector<Scalar> row(prev.size() + 1);
  for (long k = 0; k < static_cast<long>(row.size()); ++k)
    row[k] = a * at(prev, k - 1) + (a * Scalar(k) + b) * at(prev, k);
  return row;
}

Scalar require_invertible(const Scalar& c, const char* name) {
  if (!c.is_constant() || c.is_zero())
    throw std::domain_error(std::string("transform_params: ") + name + " = " + c.to_string() + " is not invertible");
  return c.inverse();
}

}  // namespace

Scalar gsn2(const BivariateParams& bp, long k) { return explicit_value(bp.a1, bp.b1, bp.a2, bp.b2, bp.p1, bp.p2, k); }

std::vector<Scalar> gsn2_row(const BivariateParams& bp) {
  std::vector<Scalar> row;
  for (long k = 0; k <= static_cast<long>(bp.degree()); ++k) row.push_back(gsn2(bp, k));
  return row;
}

Scalar gsn1(const Scalar& a, const Scalar& b, unsigned p, long k) { return explicit_value(a, b, 1, 0, p, 0, k); }

std::vector<std::vector<Scalar>> gsn2_recurrence_rows(const Coefficients& c, unsigned p2, unsigned last_row) {
  std::vector<Scalar> base{Scalar(1)};
  for (unsigned q = 0; q < p2; ++q) base = recurrence_step(base, c.a2, c.b2);
  std::vector<std::vector<Scalar>> rows{std::move(base)};
  for (unsigned p = 1; p <= last_row; ++p) rows.push_back(recurrence_step(rows.back(), c.a1, c.b1));
  return rows;
}

Scalar gsn2_recurrence(const BivariateParams& bp, long k) {
  if (bp.p1 == 0) throw std::invalid_argument("gsn2_recurrence: p1 must be at least 1");
  const auto rows = gsn2_recurrence_rows(bp.coefficients(), bp.p2, bp.p1 - 1);
  const auto& prev = rows.back();
  return bp.a1 * at(prev, k - 1) + (bp.a1 * Scalar(k) + bp.b1) * at(prev, k);
}

Scalar transform_params(const BivariateParams& bp, const Target& target, long k) {
  const Scalar c1_inv = require_invertible(target.c1, "c1");
  const Scalar c2_inv = require_invertible(target.c2, "c2");
  const Scalar u1 = bp.b1 * target.c1 - bp.a1 * target.d1;
  const Scalar u2 = bp.b2 * target.c2 - bp.a2 * target.d2;
  Scalar sum(0);
  for (long j1 = 0; j1 <= bp.p1; ++j1)
    for (long j2 = 0; j2 <= bp.p2; ++j2)
      sum += B(bp.p1, j1) * B(bp.p2, j2) * pw(bp.a1, j1) * pw(bp.a2, j2) * pw(u1, bp.p1 - j1) *
             pw(u2, bp.p2 - j2) *
             explicit_value(target.c1, target.d1, target.c2, target.d2, static_cast<unsigned>(j1),
                            static_cast<unsigned>(j2), k);
  return pw(c1_inv, bp.p1) * pw(c2_inv, bp.p2) * sum;
}

Scalar shift_b(const BivariateParams& bp, long k) { return gsn2(bp, k) + Scalar(k + 1) * gsn2(bp, k + 1); }

Scalar shifted_expansion_factorial(const BivariateParams& bp, const Target& target, unsigned m, long k) {
  const Scalar c1_inv = require_invertible(target.c1, "c1");
  const Scalar c2_inv = require_invertible(target.c2, "c2");
  const Scalar ms(m);
  const Scalar u1 = bp.b1 * target.c1 - bp.a1 * target.c1 * ms - bp.a1 * target.d1;
  const Scalar u2 = bp.b2 * target.c2 - bp.a2 * target.c2 * ms - bp.a2 * target.d2;
  Scalar sum(0);
  for (long j1 = 0; j1 <= bp.p1; ++j1)
    for (long j2 = 0; j2 <= bp.p2; ++j2) {
      Scalar inner(0);
      for (long t = 0; t <= static_cast<long>(m); ++t)
        inner += B(m, t) * fact(k + t) *
                 explicit_value(target.c1, target.d1, target.c2, target.d2, static_cast<unsigned>(j1),
                                static_cast<unsigned>(j2), k + t);
      sum += B(bp.p1, j1) * B(bp.p2, j2) * pw(bp.a1, j1) * pw(bp.a2, j2) * pw(u1, bp.p1 - j1) *
             pw(u2, bp.p2 - j2) * inner;
    }
  return pw(c1_inv, bp.p1) * pw(c2_inv, bp.p2) * sum;
}

Scalar shifted_expansion_standard(const BivariateParams& bp, unsigned m, long k) {
  const Scalar ms(m);
  const Scalar u1 = bp.b1 - bp.a1 * ms;
  const Scalar u2 = bp.b2 - bp.a2 * ms;
  Scalar sum(0);
  for (long j1 = 0; j1 <= bp.p1; ++j1)
    for (long j2 = 0; j2 <= bp.p2; ++j2) {
      Scalar inner(0);
      for (long t = 0; t <= static_cast<long>(m); ++t) inner += B(m, t) * fact(k + t) * S(j1 + j2, k + t);
      sum += B(bp.p1, j1) * B(bp.p2, j2) * pw(bp.a1, j1) * pw(bp.a2, j2) * pw(u1, bp.p1 - j1) *
             pw(u2, bp.p2 - j2) * inner;
    }
  return sum;
}

Scalar m_shift_representation(const BivariateParams& bp, unsigned m, long k) {
  const Scalar ms(m);
  const Scalar u1 = bp.b1 - bp.a1 * ms;
  const Scalar u2 = bp.b2 - bp.a2 * ms;
  const long mm = m;
  Scalar sum(0);
  for (long j1 = 0; j1 <= bp.p1; ++j1)
    for (long j2 = 0; j2 <= bp.p2; ++j2) {
      Scalar inner(0);
      if (m == 0) {
        inner = S(j1 + j2, k);
      } else {
        for (long t = 0; t < mm; ++t) inner += sgn(t, s1(mm, mm - t) * S(j1 + j2 + mm - t, k + mm));
      }
      sum += B(bp.p1, j1) * B(bp.p2, j2) * pw(bp.a1, j1) * pw(bp.a2, j2) * pw(u1, bp.p1 - j1) *
             pw(u2, bp.p2 - j2) * inner;
    }
  return sum;
}

Rational s1m_representation(unsigned m, long p, long k) {
  if (m == 0) throw std::invalid_argument("s1m_representation: m must be a positive integer");
  const long mm = m;
  Rational sum(0);
  for (long t = 0; t < mm; ++t) {
    const Rational term = stirling1_unsigned(mm, mm - t) * stirling2(p + mm - t, k + mm);
    sum += t % 2 == 0 ? term : -term;
  }
  return sum;
}

std::pair<Rational, Rational> lemma3_lhs_rhs(unsigned j, unsigned k, unsigned m) {
  if (k > j) throw std::invalid_argument("lemma3_lhs_rhs: requires k <= j");
  if (m == 0) throw std::invalid_argument("lemma3_lhs_rhs: requires m >= 1");
  Rational lhs(0);
  for (long t = 0; t <= static_cast<long>(m); ++t)
    lhs += binom_int(m, t) * factorial(k + static_cast<unsigned>(t)) * stirling2(j, k + t);
  Rational rhs(0);
  for (long t = 0; t < static_cast<long>(m); ++t) {
    const Rational term = stirling1_unsigned(m, m - t) * stirling2(j + m - t, k + m);
    rhs += t % 2 == 0 ? term : -term;
  }
  return {lhs, factorial(k) * rhs};
}

Rational stirling_recurrence_family(unsigned p1, unsigned p2, long l) {
  if (p2 == 0) throw std::invalid_argument("stirling_recurrence_family: p2 must be positive");
  Rational sum(0);
  for (long k = 1; k < static_cast<long>(p2); ++k) {
    const Rational term = stirling1_unsigned(p2, k) * stirling2(p1 + k, l);
    sum += (p2 + 1 + k) % 2 == 0 ? term : -term;
  }
  for (long j = 0; j <= static_cast<long>(p1); ++j)
    sum += binom_int(p1, j) * Rational(p2).pow(static_cast<unsigned>(p1 - j)) * stirling2(j, l - p2);
  return sum;
}

Rational stirling_iterated(unsigned step, long p, long l) {
  const Rational L(l);
  switch (step) {
    case 2:
      return L * L * stirling2(p, l) + (Rational(2) * L - Rational(1)) * stirling2(p, l - 1) + stirling2(p, l - 2);
    case 3:
      return L.pow(3) * stirling2(p, l) + (Rational(3) * L * L - Rational(3) * L + Rational(1)) * stirling2(p, l - 1) +
             Rational(3) * (L - Rational(1)) * stirling2(p, l - 2) + stirling2(p, l - 3);
    default:
      throw std::invalid_argument("stirling_iterated: step must be 2 or 3");
  }
}

Scalar lemma4_rhs(const Coefficients& c, unsigned p2, unsigned q1, unsigned q2, long l) {
  Scalar sum(0);
  for (long m = 0; m <= static_cast<long>(p2 + q2); ++m)
    sum += G(c, p2, q2, m) * gsn1(c.a2, c.a2 * Scalar(m) + c.b2, q1, l - m);
  return sum;
}

Scalar convolution_q(const Coefficients& c, unsigned p1, unsigned p2, unsigned q1, unsigned q2, long l) {
  Scalar sum(0);
  for (long m = 0; m <= static_cast<long>(p2 + q2); ++m) {
    const Scalar ms(m);
    sum += G(c, p2, q2, m) * explicit_value(c.a1, c.a1 * ms + c.b1, c.a2, c.a2 * ms + c.b2, p1, q1, l - m);
  }
  return sum;
}

Scalar convolution_triple(const Coefficients& c, const TripleIndices& idx, long l) {
  Scalar sum(0);
  for (long n = 0; n <= static_cast<long>(idx.p3 + idx.q3); ++n) {
    const Scalar outer = G(c, idx.p3, idx.q3, n);
    if (outer.is_zero()) continue;
    const Scalar ns(n);
    for (long m = 0; m <= static_cast<long>(idx.p2 + idx.q2); ++m) {
      const Scalar mn(m + n);
      sum += outer * explicit_value(c.a1, c.a1 * ns + c.b1, c.a2, c.a2 * ns + c.b2, idx.p2, idx.q2, m) *
             explicit_value(c.a1, c.a1 * mn + c.b1, c.a2, c.a2 * mn + c.b2, idx.p1, idx.q1, l - n - m);
    }
  }
  return sum;
}

std::pair<Rational, Rational> corollary3_identity(unsigned p1, unsigned p2, unsigned q1, unsigned q2, long l,
                                                  long t) {
  Rational lhs(0);
  for (long r = 0; r <= static_cast<long>(q1 + q2); ++r)
    lhs += binom_int(p1 + p2 + r, t) * binom_int(q1 + q2, r) * stirling2(p1 + p2 + r - t, l);
  Rational rhs(0);
  for (long m = 0; m <= static_cast<long>(p2 + q2); ++m)
    for (long r1 = 0; r1 <= static_cast<long>(q1); ++r1)
      for (long r2 = 0; r2 <= static_cast<long>(q2); ++r2)
        for (long k = 0; k <= static_cast<long>(p1) + r1; ++k)
          for (long s = 0; s <= k; ++s)
            rhs += binom_int(q1, r1) * binom_int(q2, r2) * binom_int(p1 + r1, k) * binom_int(p2 + r2, t - s) *
                   binom_int(k, s) * Rational(m).pow(static_cast<unsigned>(k - s)) *
                   stirling2(p2 + r2 - t + s, m) * stirling2(p1 + r1 - k, l - m);
  return {lhs, rhs};
}

std::pair<Rational, Rational> binomial_identity(unsigned p1, unsigned p2, unsigned q1, unsigned q2) {
  const long P1 = p1, P2 = p2;
  Rational lhs(0);
  for (long r = 1; r <= static_cast<long>(q1 + q2); ++r) lhs += binom_int(P1 + P2 + r, r) * binom_int(q1 + q2, r);
  Rational rhs(0);
  for (long r2 = 1; r2 <= static_cast<long>(q2); ++r2) {
    Rational inner = binom_int(P1, r2);
    for (long s = 0; s < r2; ++s) inner += binom_int(P2 + r2, r2 - s) * binom_int(P1, s);
    rhs += binom_int(q2, r2) * inner;
  }
  for (long r1 = 1; r1 <= static_cast<long>(q1); ++r1) {
    Rational inner = binom_int(P1 + r1, r1);
    for (long s = 0; s < r1; ++s) inner += binom_int(P2, r1 - s) * binom_int(P1 + r1, s);
    rhs += binom_int(q1, r1) * inner;
  }
  for (long r1 = 1; r1 <= static_cast<long>(q1); ++r1)
    for (long r2 = 1; r2 <= static_cast<long>(q2); ++r2) {
      Rational inner = binom_int(P1 + r1, r1 + r2);
      for (long s = 0; s < r1 + r2; ++s) inner += binom_int(P2 + r2, r2 + r1 - s) * binom_int(P1 + r1, s);
      rhs += binom_int(q1, r1) * binom_int(q2, r2) * inner;
    }
  return {lhs, rhs};
}

std::pair<Scalar, Scalar> claim_plus_one(const Scalar& a, const Scalar& b, unsigned q, unsigned p, long k) {
  const Scalar lhs = explicit_value(a, b, a, b + Scalar(1), p, q, k);
  Scalar rhs(0);
  for (long r = 0; r <= static_cast<long>(q); ++r) rhs += B(q, r) * gsn1(a, b, p + static_cast<unsigned>(r), k);
  return {lhs, rhs};
}

std::pair<Scalar, Scalar> power_sum(const BivariateParams& bp, unsigned m, long k) {
  if (m == 0 || k < 0 || k >= static_cast<long>(m))
    throw std::out_of_range("power_sum: requires m >= 1 and 0 <= k < m");
  const long M = m;
  const Scalar ms(m);
  const Scalar b1m = bp.b1 + bp.a1 * ms;
  const Scalar b2m = bp.b2 + bp.a2 * ms;
  Scalar lhs(0);
  for (long t = 0; t <= M - k - 1; ++t)
    lhs += B(M, t + k + 1) * fact(t) * explicit_value(-bp.a1, b1m, -bp.a2, b2m, bp.p1, bp.p2, t);
  Scalar rhs(0);
  for (long t = k + 1; t <= M; ++t) {
    const Scalar ts(t);
    rhs += B(t - 1, k) * pw(bp.b1 + bp.a1 * ts, bp.p1) * pw(bp.b2 + bp.a2 * ts, bp.p2);
  }
  return {lhs, rhs};
}

std::pair<Rational, Rational> power_sum_example_1(unsigned m, long k) {
  const long M = m;
  Rational lhs(0);
  for (long t = k + 1; t <= M; ++t) lhs += binom_int(t - 1, k) * Rational(M - t) * Rational(t - M - 1).pow(2);
  return {lhs, Rational(4) * binom_int(M + 1, k + 3) + Rational(6) * binom_int(M + 1, k + 4)};
}

std::pair<Rational, Rational> power_sum_example_2(unsigned m, long k) {
  const long M = m;
  Rational lhs(0);
  for (long t = k + 1; t <= M; ++t) lhs += binom_int(t - 1, k) * Rational(M - t).pow(3);
  return {lhs, binom_int(M, k + 2) + Rational(6) * binom_int(M + 1, k + 4)};
}

std::pair<Scalar, Scalar> vandermonde_convolution(const BivariateParams& bp, unsigned k, unsigned mu) {
  const long K = k, MU = mu;
  const Scalar lhs = B(K + MU, K) * gsn2(bp, K + MU);
  Scalar rhs(0);
  for (long j1 = 0; j1 <= bp.p1; ++j1)
    for (long j2 = 0; j2 <= bp.p2; ++j2) {
      const Scalar left = explicit_value(bp.a1, 0, bp.a2, 0, static_cast<unsigned>(bp.p1 - j1),
                                         static_cast<unsigned>(bp.p2 - j2), MU);
      if (left.is_zero()) continue;
      rhs += B(bp.p1, j1) * B(bp.p2, j2) * left *
             explicit_value(bp.a1, bp.b1, bp.a2, bp.b2, static_cast<unsigned>(j1), static_cast<unsigned>(j2), K);
    }
  return {lhs, rhs};
}

NumberTable triangle(const Coefficients& c, unsigned p2, unsigned last_row) {
  NumberTable table;
  table.kind = TableKind::GSN;
  table.params = BivariateParams(c, last_row, p2).to_param_spec();
  table.route = Route::Recurrence;
  table.rows = gsn2_recurrence_rows(c, p2, last_row);
  for (unsigned p = 0; p <= last_row; ++p) {
    const auto& row = table.rows[p];
    for (long k = 0; k < static_cast<long>(row.size()); ++k) {
      const Scalar direct = G(c, p, p2, k);
      if (!(direct == row[k]))
        throw std::logic_error("triangle: recurrence gives " + row[k].to_string() + " at (" + std::to_string(p) +
                               "," + std::to_string(k) + "), explicit formula gives " + direct.to_string());
    }
  }
  return table;
}

}  // namespace gsn
