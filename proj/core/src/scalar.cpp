#include "gsn/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "gsn/errors.hpp"

namespace gsn {

Scalar Scalar::parse(std::string_view text) {
  try {
    return Scalar(Rational::parse(text));
  } catch (const ParseError&) {
  }
  MultiPoly p = MultiPoly::parse(text);
  if (p.is_constant()) return Scalar(p.constant_term());
  return Scalar(std::move(p));
}

Rational Scalar::to_rational() const {
  if (const auto* r = rational()) return *r;
  const MultiPoly& p = *poly();
  if (!p.is_constant()) throw std::domain_error("Scalar: '" + p.to_string() + "' is not a constant");
  return p.constant_term();
}

MultiPoly Scalar::to_poly() const {
  if (const auto* p = poly()) return *p;
  return MultiPoly(*rational());
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = rational()) return r->is_zero();
  return poly()->is_zero();
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = rational()) return r->is_one();
  const MultiPoly& p = *poly();
  return p.is_constant() && p.constant_term().is_one();
}

bool Scalar::is_constant() const noexcept { return rational() != nullptr || poly()->is_constant(); }

Scalar Scalar::pow(unsigned exponent) const {
  if (const auto* r = rational()) return Scalar(r->pow(exponent));
  return Scalar(poly()->pow(exponent));
}

Scalar Scalar::inverse() const {
  const Rational c = to_rational();
  return Scalar(c.inverse());
}

std::string Scalar::to_string() const {
  if (const auto* r = rational()) return r->to_string();
  return poly()->to_string();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* r = std::get_if<Rational>(&value_); r && o.rational()) {
    *r += *o.rational();
  } else {
    MultiPoly p = to_poly();
    if (const auto* orat = o.rational())
      p += MultiPoly(*orat);
    else
      p += *o.poly();
    value_ = std::move(p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (auto* r = std::get_if<Rational>(&value_); r && o.rational()) {
    *r -= *o.rational();
  } else {
    MultiPoly p = to_poly();
    if (const auto* orat = o.rational())
      p -= MultiPoly(*orat);
    else
      p -= *o.poly();
    value_ = std::move(p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* r = std::get_if<Rational>(&value_); r && o.rational()) {
    *r *= *o.rational();
  } else if (const auto* orat = o.rational()) {
    std::get<MultiPoly>(value_) *= *orat;
  } else if (auto* rr = std::get_if<Rational>(&value_)) {
    value_ = *o.poly() * *rr;
  } else {
    value_ = std::get<MultiPoly>(value_) * *o.poly();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  const Rational d = o.to_rational();
  if (d.is_zero()) throw std::domain_error("Scalar: division by zero");
  return *this *= Scalar(d.inverse());
}

Scalar operator-(const Scalar& a) {
  if (const auto* r = a.rational()) return Scalar(-*r);
  return Scalar(-*a.poly());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rational() && b.rational()) return *a.rational() == *b.rational();
  return a.to_poly() == b.to_poly();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace gsn
