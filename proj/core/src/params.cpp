#include "gsn/params.hpp"

#include <algorithm>
#include <sstream>

#include "gsn/exact.hpp"

namespace gsn {

ParamSpec::ParamSpec(Scalar a, Scalar b, unsigned r, unsigned p, std::vector<Factor> factors)
    : a_(std::move(a)), b_(std::move(b)), r_(r), p_(p) {
  for (auto& f : factors)
    if (f.r * f.p != 0) factors_.push_back(std::move(f));
}

unsigned ParamSpec::sigma() const noexcept {
  unsigned s = 0;
  for (const auto& f : factors_) s += f.degree();
  return s;
}

Rational ParamSpec::scale() const {
  Rational s = factorial(r_).pow(p_);
  for (const auto& f : factors_) s *= factorial(f.r).pow(f.p);
  return s;
}

ParamSpec ParamSpec::with_p(unsigned p) const {
  ParamSpec out = *this;
  out.p_ = p;
  return out;
}

bool ParamSpec::is_symbolic() const noexcept {
  if (a_.is_symbolic() || b_.is_symbolic()) return true;
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.alpha.is_symbolic() || f.beta.is_symbolic(); });
}

std::string ParamSpec::describe() const {
  std::ostringstream os;
  os << "a=" << a_ << " b=" << b_ << " r=" << r_ << " p=" << p_;
  for (const auto& f : factors_) os << " factor=(" << f.alpha << "," << f.beta << "," << f.r << "," << f.p << ")";
  return os.str();
}

std::string Coefficients::describe() const {
  std::ostringstream os;
  os << "a1=" << a1 << " b1=" << b1 << " a2=" << a2 << " b2=" << b2;
  return os.str();
}

ParamSpec BivariateParams::to_param_spec() const { return ParamSpec(a1, b1, 1, p1, {Factor{a2, b2, 1, p2}}); }

std::string BivariateParams::describe() const {
  std::ostringstream os;
  os << coefficients().describe() << " p1=" << p1 << " p2=" << p2;
  return os.str();
}

}  // namespace gsn
