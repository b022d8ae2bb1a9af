#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gsn {

/// Exact rational number in canonical form (denominator > 0, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal values always have identical numerator/denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    mpz_set_si(value_.get_num_mpz_t(), static_cast<long>(value));
  }
  template <std::unsigned_integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    mpz_set_ui(value_.get_num_mpz_t(), static_cast<unsigned long>(value));
  }

  /// num / den; throws std::domain_error when den == 0.
  Rational(long num, long den);
  explicit Rational(mpq_class value);
  explicit Rational(const mpz_class& integer);

  /// Accepts `[+-]digits[/digits]`, e.g. "-3/2" or "7". Throws ParseError.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// Value as a signed 64-bit integer; requires is_integer() and a fitting magnitude.
  std::int64_t to_int64() const;

  Rational pow(unsigned exponent) const;
  /// Multiplicative inverse; throws std::domain_error for zero.
  Rational inverse() const;
  Rational abs() const { return Rational(::abs(value_)); }

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gsn
