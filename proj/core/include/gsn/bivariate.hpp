#pragma once

#include <utility>
#include <vector>

#include "gsn/number_table.hpp"
#include "gsn/params.hpp"
#include "gsn/rational.hpp"
#include "gsn/scalar.hpp"

namespace gsn {

// Numbers S_{a1,b1}^{a2,b2,p2}(p1, k): the r = r_s = 1 family with one extra
// factor, i.e. the binomial-basis coefficients of (a1 n + b1)^p1 (a2 n + b2)^p2.

/// (1/k!) sum_j (-1)^j binom(k,j) (a1(k-j)+b1)^p1 (a2(k-j)+b2)^p2; zero outside 0..p1+p2.
Scalar gsn2(const BivariateParams& bp, long k);
std::vector<Scalar> gsn2_row(const BivariateParams& bp);

/// S_{a,b}(p, k), the family without the second factor.
Scalar gsn1(const Scalar& a, const Scalar& b, unsigned p, long k);

/// a1 S(p1-1, k-1) + (a1 k + b1) S(p1-1, k), with the p1 = 0 row built by the
/// same recurrence in (a2, b2) from S(0,0) = 1. Throws std::invalid_argument for p1 = 0.
Scalar gsn2_recurrence(const BivariateParams& bp, long k);
/// Recurrence rows p1 = 0..last_row.
std::vector<std::vector<Scalar>> gsn2_recurrence_rows(const Coefficients& c, unsigned p2, unsigned last_row);

/// Target family (c1, d1, c2, d2) of the change-of-parameters formula.
struct Target {
  Scalar c1 = 1;
  Scalar d1 = 0;
  Scalar c2 = 1;
  Scalar d2 = 0;
  static Target standard() { return {}; }
};

/// c1^{-p1} c2^{-p2} sum_{j1,j2} binom(p1,j1) binom(p2,j2) a1^j1 a2^j2
///   (b1 c1 - a1 d1)^{p1-j1} (b2 c2 - a2 d2)^{p2-j2} S_{c1,d1}^{c2,d2,j2}(j1, k).
/// Throws std::domain_error unless c1 and c2 are invertible constants.
Scalar transform_params(const BivariateParams& bp, const Target& target, long k);

/// S with (b1, b2) -> (a1 + b1, a2 + b2), computed as S(p1,k) + (k+1) S(p1,k+1).
Scalar shift_b(const BivariateParams& bp, long k);

/// The m-shifted change of parameters; equals k! S(p1, k) for every m >= 0.
Scalar shifted_expansion_factorial(const BivariateParams& bp, const Target& target, unsigned m, long k);
/// Same with the standard target, written with classical S(j, k+t); equals k! S(p1, k).
Scalar shifted_expansion_standard(const BivariateParams& bp, unsigned m, long k);
/// S(p1, k) through classical numbers: m = 0 is the plain standard expansion,
/// m >= 1 uses the first-kind form sum_t (-1)^t s(m, m-t) S(j1+j2+m-t, k+m).
Scalar m_shift_representation(const BivariateParams& bp, unsigned m, long k);

/// S_{1,m}(p, k) = sum_{t<m} (-1)^t s(m, m-t) S(p+m-t, k+m). Throws for m = 0.
Rational s1m_representation(unsigned m, long p, long k);

/// Both sides of sum_t binom(m,t) (k+t)! S(j,k+t) = k! sum_{t<m} (-1)^t s(m,m-t) S(j+m-t,k+m).
/// Requires k <= j and m >= 1.
std::pair<Rational, Rational> lemma3_lhs_rhs(unsigned j, unsigned k, unsigned m);

/// Right side of the classical recurrence
/// S(p1+p2, l) = sum_{k=1}^{p2-1} (-1)^{p2+1+k} s(p2,k) S(p1+k,l)
///             + sum_j binom(p1,j) p2^{p1-j} S(j, l-p2);  requires p2 >= 1.
Rational stirling_recurrence_family(unsigned p1, unsigned p2, long l);
/// Iterated recurrence S(p+step, l) for step = 2 or 3 as a fixed combination of
/// S(p, l), ..., S(p, l-step).
Rational stirling_iterated(unsigned step, long p, long l);

/// sum_m S_{a1,b1}^{a2,b2,q2}(p2, m) S_{a2, a2 m + b2}(q1, l - m)
/// (equals S_{a1,b1}^{a2,b2,q1+q2}(p2, l)).
Scalar lemma4_rhs(const Coefficients& c, unsigned p2, unsigned q1, unsigned q2, long l);

/// sum_m S_{a1,b1}^{a2,b2,q2}(p2, m) S_{a1, a1 m + b1}^{a2, a2 m + b2, q1}(p1, l - m)
/// (equals S_{a1,b1}^{a2,b2,q1+q2}(p1+p2, l)).
Scalar convolution_q(const Coefficients& c, unsigned p1, unsigned p2, unsigned q1, unsigned q2, long l);

struct TripleIndices {
  unsigned p1 = 0, p2 = 0, p3 = 0;
  unsigned q1 = 0, q2 = 0, q3 = 0;
};
/// Three-part version: double sum over n, m of products of three GSNs.
Scalar convolution_triple(const Coefficients& c, const TripleIndices& idx, long l);

/// Both sides of the double convolution in classical numbers:
/// sum_r binom(p1+p2+r, t) binom(q1+q2, r) S(p1+p2+r-t, l) = (five-fold sum).
std::pair<Rational, Rational> corollary3_identity(unsigned p1, unsigned p2, unsigned q1, unsigned q2,
                                                  long l, long t);
/// The pure-binomial identity obtained at t = p1+p2, l = 1.
std::pair<Rational, Rational> binomial_identity(unsigned p1, unsigned p2, unsigned q1, unsigned q2);
/// S_{a,b}^{a,b+1,q}(p, k) against sum_r binom(q,r) S_{a,b}(p+r, k).
std::pair<Scalar, Scalar> claim_plus_one(const Scalar& a, const Scalar& b, unsigned q, unsigned p, long k);

/// Power sums, for m >= 1 and 0 <= k < m:
///   sum_{t=0}^{m-k-1} binom(m, t+k+1) t! S_{-a1, b1+a1 m}^{-a2, b2+a2 m, p2}(p1, t)
///     = sum_{t=k+1}^{m} binom(t-1, k) (b1 + a1 t)^p1 (b2 + a2 t)^p2.
/// Returns (left, right); throws std::out_of_range for k outside 0..m-1.
std::pair<Scalar, Scalar> power_sum(const BivariateParams& bp, unsigned m, long k);
/// sum_{t=k+1}^{m} binom(t-1,k) (m-t)(t-m-1)^2 against 4 binom(m+1,k+3) + 6 binom(m+1,k+4).
std::pair<Rational, Rational> power_sum_example_1(unsigned m, long k);
/// sum_{t=k+1}^{m} binom(t-1,k) (m-t)^3 against binom(m,k+2) + 6 binom(m+1,k+4).
std::pair<Rational, Rational> power_sum_example_2(unsigned m, long k);

/// binom(k+mu, k) S(p1, k+mu) against
/// sum_{j1,j2} binom(p1,j1) binom(p2,j2) S_{a1,0}^{a2,0,p2-j2}(p1-j1, mu) S_{a1,b1}^{a2,b2,j2}(j1, k).
std::pair<Scalar, Scalar> vandermonde_convolution(const BivariateParams& bp, unsigned k, unsigned mu);

/// Triangle rows p1 = 0..last_row for fixed (a1, b1, a2, b2, p2). Rows come
/// from the recurrence and every entry is compared with gsn2; a mismatch
/// throws std::logic_error.
NumberTable triangle(const Coefficients& c, unsigned p2, unsigned last_row);

}  // namespace gsn
