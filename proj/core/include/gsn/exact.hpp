#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gsn/multipoly.hpp"
#include "gsn/rational.hpp"
#include "gsn/scalar.hpp"

namespace gsn {

Rational factorial(unsigned n);

/// binom(n, k) for any integer n: zero for k < 0, otherwise the falling
/// factorial n(n-1)...(n-k+1) / k!, so upper negation holds.
Rational binom_int(long n, long k);

/// Generalized binomial x(x-1)...(x-r+1) / r!; equals 1 for r = 0.
Scalar binom_scalar(const Scalar& x, unsigned r);
Rational binom_rational(const Rational& x, unsigned r);

/// x^e with 0^0 = 1.
Scalar power_scalar(const Scalar& x, unsigned exponent);

/// Taylor shift to powers of (z - 1). Both vectors are ascending:
/// input[i] multiplies z^i, output[j] multiplies (z - 1)^j.
std::vector<Scalar> rebase_z_to_zm1(std::span<const Scalar> z_coefficients);
std::vector<Scalar> rebase_zm1_to_z(std::span<const Scalar> zm1_coefficients);
/// Same shift for a polynomial in `var`; other indeterminates stay in the coefficients.
std::vector<Scalar> rebase_z_to_zm1(const MultiPoly& poly, std::string_view var = "z");

/// Newton coefficients Delta^k f(0) of the values f(0), f(1), ..., f(d).
std::vector<Scalar> forward_differences_at_zero(std::span<const Scalar> values);

/// Coefficients c_k with f(n) = sum_k c_k binom(n, k), k = 0..degree.
/// Throws DegreeOverflow when deg_var(f) > degree.
std::vector<Scalar> expand_in_binomial_basis(const MultiPoly& f, unsigned degree,
                                             std::string_view var = "n");

/// Evaluates sum_k coefficients[k] * binom(n, k).
Scalar evaluate_binomial_basis(std::span<const Scalar> coefficients, long n);

}  // namespace gsn
