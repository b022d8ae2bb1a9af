#pragma once

#include <string>
#include <vector>

#include "gsn/rational.hpp"
#include "gsn/scalar.hpp"

namespace gsn {

/// One extra factor binom(alpha n + beta, r)^p of the product.
struct Factor {
  Scalar alpha;
  Scalar beta;
  unsigned r = 0;
  unsigned p = 0;

  unsigned degree() const noexcept { return r * p; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Full parameter tuple of a GSN/GEN family:
/// binom(a n + b, r)^p * prod_s binom(alpha_s n + beta_s, r_s)^{p_s}.
///
/// Factors with r_s * p_s == 0 contribute the constant 1 and are dropped on
/// construction, so factors().empty() exactly when sigma() == 0.
class ParamSpec {
 public:
  ParamSpec() : ParamSpec(1, 0, 1, 0) {}
  ParamSpec(Scalar a, Scalar b, unsigned r, unsigned p, std::vector<Factor> factors = {});

  /// a = 1, b = 0, r = 1, no factors: the classical Stirling/Eulerian case.
  static ParamSpec standard(unsigned p) { return ParamSpec(1, 0, 1, p); }

  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  unsigned r() const noexcept { return r_; }
  unsigned p() const noexcept { return p_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  unsigned sigma() const noexcept;
  /// r p + sigma.
  unsigned degree() const noexcept { return r_ * p_ + sigma(); }
  /// (r!)^p prod_s (r_s!)^{p_s}.
  Rational scale() const;

  ParamSpec with_p(unsigned p) const;
  bool is_symbolic() const noexcept;

  std::string describe() const;

  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;

 private:
  Scalar a_;
  Scalar b_;
  unsigned r_ = 1;
  unsigned p_ = 0;
  std::vector<Factor> factors_;
};

/// The four scalars of the r = r_s = 1, L = 2 family S_{a1,b1}^{a2,b2,p2}(p1, k).
struct Coefficients {
  Scalar a1 = 1;
  Scalar b1 = 0;
  Scalar a2 = 1;
  Scalar b2 = 0;

  static Coefficients standard() { return {}; }
  static Coefficients symbolic() {
    return {Scalar::symbol("a1"), Scalar::symbol("b1"), Scalar::symbol("a2"), Scalar::symbol("b2")};
  }
  std::string describe() const;
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

struct BivariateParams {
  Scalar a1 = 1;
  Scalar b1 = 0;
  Scalar a2 = 1;
  Scalar b2 = 0;
  unsigned p1 = 0;
  unsigned p2 = 0;

  BivariateParams() = default;
  BivariateParams(Scalar a1_, Scalar b1_, Scalar a2_, Scalar b2_, unsigned p1_, unsigned p2_)
      : a1(std::move(a1_)), b1(std::move(b1_)), a2(std::move(a2_)), b2(std::move(b2_)), p1(p1_), p2(p2_) {}
  BivariateParams(const Coefficients& c, unsigned p1_, unsigned p2_)
      : BivariateParams(c.a1, c.b1, c.a2, c.b2, p1_, p2_) {}

  unsigned degree() const noexcept { return p1 + p2; }
  Coefficients coefficients() const { return {a1, b1, a2, b2}; }
  /// Equivalent general-family spec: a=a1, b=b1, r=1, p=p1, factor (a2, b2, 1, p2).
  ParamSpec to_param_spec() const;
  std::string describe() const;

  friend bool operator==(const BivariateParams&, const BivariateParams&) = default;
};

}  // namespace gsn
