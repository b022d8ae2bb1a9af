#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsn/rational.hpp"

namespace gsn {

using VarId = std::uint32_t;

/// Process-wide registry of indeterminate names.
///
/// Ids are handed out in first-use order, after a fixed preamble
/// (a, b, a1, b1, a2, b2, c1, d1, c2, d2, n, z, x) so that the common names
/// always serialize in the same order. Safe to call from any thread.
class Indeterminates {
 public:
  static VarId intern(std::string_view name);
  static const std::string& name(VarId id);
};

/// Product of indeterminate powers; the exponent list is sorted by VarId and
/// holds only positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId var, unsigned exponent = 1);

  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(VarId var) const noexcept;
  bool is_one() const noexcept { return powers_.empty(); }
  const std::vector<std::pair<VarId, unsigned>>& powers() const noexcept { return powers_; }

  /// Same monomial with `var` removed.
  Monomial without(VarId var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::pair<VarId, unsigned>> powers_;
  unsigned degree_ = 0;
};

/// Graded order, ties broken lexicographically by VarId. Larger monomials
/// compare "less" so that map iteration yields leading terms first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with Rational coefficients.
///
/// Never stores a zero coefficient; the zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& coefficient, Monomial monomial);

  static MultiPoly variable(std::string_view name);

  /// Parses the text produced by to_string(), e.g. "2*a1^2*b2 - 1/3".
  static MultiPoly parse(std::string_view text);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  unsigned total_degree() const noexcept;
  unsigned degree_in(VarId var) const noexcept;
  unsigned degree_in(std::string_view name) const { return degree_in(Indeterminates::intern(name)); }
  /// Indeterminates with a positive exponent somewhere, in VarId order.
  std::vector<VarId> variables() const;

  /// Coefficients of var^0, var^1, ... as polynomials in the remaining indeterminates.
  std::vector<MultiPoly> coefficients_in(VarId var) const;

  MultiPoly substitute(VarId var, const MultiPoly& value) const;
  MultiPoly substitute(VarId var, const Rational& value) const;

  MultiPoly pow(unsigned exponent) const;

  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

}  // namespace gsn
