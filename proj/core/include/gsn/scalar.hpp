#pragma once

#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "gsn/multipoly.hpp"
#include "gsn/rational.hpp"

namespace gsn {

/// The number type every higher module computes with: an exact Rational in
/// numeric mode, or a MultiPoly over named indeterminates in symbolic mode.
///
/// Mixing the two promotes to MultiPoly; a Rational-only computation never
/// leaves Rational. Equality compares values, not the active alternative.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT
  Scalar(MultiPoly value) : value_(std::move(value)) {}  // NOLINT
  template <std::integral T>
  Scalar(T value) : value_(Rational(value)) {}  // NOLINT

  static Scalar symbol(std::string_view name) { return Scalar(MultiPoly::variable(name)); }
  /// Rational syntax first, then polynomial syntax.
  static Scalar parse(std::string_view text);

  bool is_symbolic() const noexcept { return std::holds_alternative<MultiPoly>(value_); }
  const Rational* rational() const noexcept { return std::get_if<Rational>(&value_); }
  const MultiPoly* poly() const noexcept { return std::get_if<MultiPoly>(&value_); }

  /// Numeric value; throws std::domain_error for a non-constant polynomial.
  Rational to_rational() const;
  MultiPoly to_poly() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True for rationals and for constant polynomials.
  bool is_constant() const noexcept;

  Scalar pow(unsigned exponent) const;
  /// Inverse of a nonzero constant; throws std::domain_error otherwise.
  Scalar inverse() const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Division by a nonzero constant only.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, MultiPoly> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gsn
