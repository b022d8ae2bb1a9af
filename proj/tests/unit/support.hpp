#pragma once

#include <string>
#include <vector>

#include "gsn/params.hpp"
#include "gsn/rational.hpp"
#include "gsn/scalar.hpp"
#include "interp.hpp"

namespace testing_support {

inline gsn::Rational Q(const char* text) { return gsn::Rational::parse(text); }

inline gsn::Scalar X(const char* name) { return gsn::Scalar::symbol(name); }

inline std::vector<gsn::Scalar> ints(std::initializer_list<long> values) {
  std::vector<gsn::Scalar> out;
  for (long v : values) out.emplace_back(gsn::Rational(v));
  return out;
}

inline mpq_class to_mpq(const gsn::Scalar& s) { return s.to_rational().value(); }

inline oracle::OParams to_oracle(const gsn::ParamSpec& ps) {
  oracle::OParams o{to_mpq(ps.a()), to_mpq(ps.b()), ps.r(), ps.p(), {}};
  for (const auto& f : ps.factors()) o.factors.push_back({to_mpq(f.alpha), to_mpq(f.beta), f.r, f.p});
  return o;
}

inline std::vector<gsn::Scalar> from_mpq(const std::vector<mpq_class>& values) {
  std::vector<gsn::Scalar> out;
  for (const auto& v : values) out.emplace_back(gsn::Rational(v));
  return out;
}

}  // namespace testing_support
