#include "gsn/exact.hpp"

#include <string>

#include "gsn/errors.hpp"

namespace gsn {

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binom_int(long n, long k) {
  if (k < 0) return Rational(0);
  mpz_class top(n);
  mpz_class out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational binom_rational(const Rational& x, unsigned r) {
  Rational num(1);
  for (unsigned i = 0; i < r; ++i) num *= x - Rational(i);
  return num / factorial(r);
}

Scalar binom_scalar(const Scalar& x, unsigned r) {
  if (const auto* q = x.rational()) return Scalar(binom_rational(*q, r));
  MultiPoly num(Rational(1));
  const MultiPoly& p = *x.poly();
  for (unsigned i = 0; i < r; ++i) num *= p - MultiPoly(Rational(i));
  num *= factorial(r).inverse();
  return Scalar(std::move(num));
}

Scalar power_scalar(const Scalar& x, unsigned exponent) {
  if (exponent == 0) return Scalar(1);
  return x.pow(exponent);
}

std::vector<Scalar> rebase_z_to_zm1(std::span<const Scalar> z_coefficients) {
  // Taylor shift q(w) = p(w + 1) by repeated synthetic division.
  std::vector<Scalar> c(z_coefficients.begin(), z_coefficients.end());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
  return c;
}

std::vector<Scalar> rebase_zm1_to_z(std::span<const Scalar> zm1_coefficients) {
  std::vector<Scalar> c(zm1_coefficients.begin(), zm1_coefficients.end());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] -= c[j + 1];
  return c;
}

namespace {

Scalar from_poly(MultiPoly p) {
  if (p.is_constant()) return Scalar(p.constant_term());
  return Scalar(std::move(p));
}

}  // namespace

std::vector<Scalar> rebase_z_to_zm1(const MultiPoly& poly, std::string_view var) {
  std::vector<Scalar> coeffs;
  for (auto& c : poly.coefficients_in(Indeterminates::intern(var))) coeffs.push_back(from_poly(std::move(c)));
  return rebase_z_to_zm1(std::span<const Scalar>(coeffs));
}

std::vector<Scalar> forward_differences_at_zero(std::span<const Scalar> values) {
  std::vector<Scalar> row(values.begin(), values.end());
  std::vector<Scalar> out;
  out.reserve(row.size());
  while (!row.empty()) {
    out.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

std::vector<Scalar> expand_in_binomial_basis(const MultiPoly& f, unsigned degree, std::string_view var) {
  const VarId v = Indeterminates::intern(var);
  if (f.degree_in(v) > degree)
    throw DegreeOverflow("polynomial has degree " + std::to_string(f.degree_in(v)) + " in " +
                         std::string(var) + ", basis size is " + std::to_string(degree + 1));
  std::vector<Scalar> values;
  values.reserve(degree + 1);
  for (unsigned n = 0; n <= degree; ++n) values.push_back(from_poly(f.substitute(v, Rational(n))));
  return forward_differences_at_zero(values);
}

Scalar evaluate_binomial_basis(std::span<const Scalar> coefficients, long n) {
  Scalar sum(0);
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    sum += coefficients[k] * Scalar(binom_int(n, static_cast<long>(k)));
  return sum;
}

}  // namespace gsn
