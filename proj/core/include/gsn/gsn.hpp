#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gsn/number_table.hpp"
#include "gsn/params.hpp"
#include "gsn/scalar.hpp"

namespace gsn {

/// binom(a n + b, r)^p * prod_s binom(alpha_s n + beta_s, r_s)^{p_s} at the given n.
Scalar product_value(const ParamSpec& params, const Scalar& n);

// --- generalized Eulerian numbers --------------------------------------------

/// A(p, i) = sum_{j=0}^{i} (-1)^j binom(D+1, j) f(i-j), D = rp + sigma, f = product_value.
/// Zero outside 0..D.
Scalar gen_explicit(const ParamSpec& params, long i);
std::vector<Scalar> gen_row(const ParamSpec& params);

/// Checks f(n) = sum_i A(p,i) binom(n + D - i, D) at n = 0..D. Since both
/// sides have degree <= D, agreement at D+1 points is equality.
bool verify_gen_expansion(const ParamSpec& params);

// --- generalized Stirling numbers ----------------------------------------------

/// S(p, k) = (scale / k!) sum_{j=0}^{k} (-1)^j binom(k, j) f(k-j); zero outside 0..D.
Scalar gsn_explicit(const ParamSpec& params, long k);
std::vector<Scalar> gsn_row(const ParamSpec& params);

/// Checks f(n) = (1/scale) sum_k k! S(p,k) binom(n, k) at n = 0..D.
bool verify_gsn_expansion(const ParamSpec& params);

/// GSN from GEN: S(p,k) = (scale/k!) sum_i binom(D-i, D-k) A(p,i); requires 0 <= k <= D.
Scalar gsn_from_gen(const ParamSpec& params, long k);
/// GEN from GSN: A(p,i) = ((-1)^i/scale) sum_k binom(D-k, D-i) (-1)^k k! S(p,k); requires 0 <= i <= D.
Scalar gen_from_gsn(const ParamSpec& params, long i);

/// Whole-row forms of the two conversions, applied to arbitrary input rows of
/// length D+1 (so they can be composed and checked as linear maps).
std::vector<Scalar> convert_gen_to_gsn(const ParamSpec& params, std::span<const Scalar> gen);
std::vector<Scalar> convert_gsn_to_gen(const ParamSpec& params, std::span<const Scalar> gsn);

// --- generalized Eulerian polynomial -------------------------------------------

/// P(z) = sum_i A(p,i) z^{D-i}.
///
/// Both coefficient vectors are indexed like the numbers they come from:
/// coeffs_z[i] multiplies z^{D-i}, and coeffs_zm1[k] multiplies (z-1)^{D-k}.
struct GepPolynomial {
  ParamSpec params;
  std::vector<Scalar> coeffs_z;
  std::optional<std::vector<Scalar>> coeffs_zm1;
};

/// Builds the GEP from gen_explicit and fills coeffs_zm1 by Taylor shift.
/// Throws std::logic_error if the shifted coefficients differ from
/// k! S(p,k) / scale.
GepPolynomial gep(const ParamSpec& params);

/// The (z-1)-basis coefficients predicted by the GSN: entry k is k! S(p,k) / scale.
std::vector<Scalar> gep_zm1_from_gsn(const ParamSpec& params);

// --- boundary values -----------------------------------------------------------

struct BoundaryValues {
  Scalar first;   // k = 0
  Scalar second;  // k = 1
  Scalar last;    // k = D
};

/// Closed forms: first = (r! binom(b,r))^p prod (r_s! binom(beta_s,r_s))^{p_s},
/// second = (r! binom(a+b,r))^p prod (r_s! binom(alpha_s+beta_s,r_s))^{p_s} - first,
/// last = a^{rp} prod alpha_s^{r_s p_s}.
BoundaryValues boundary_values(const ParamSpec& params);

/// Rows p = 0..last_row of the family (params.p() is ignored).
/// Route::Explicit uses gsn_explicit, Route::Conversion goes through the GEN row.
NumberTable gsn_table(const ParamSpec& family, unsigned last_row, Route route = Route::Explicit);
NumberTable gen_table(const ParamSpec& family, unsigned last_row);

}  // namespace gsn
