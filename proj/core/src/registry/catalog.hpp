#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gsn/bivariate.hpp"
#include "gsn/classic.hpp"
#include "gsn/exact.hpp"
#include "gsn/params.hpp"
#include "gsn/registry.hpp"

namespace gsn::catalog {

void add_general(std::vector<IdentityCheck>& out);
void add_bivariate(std::vector<IdentityCheck>& out);
void add_stirling(std::vector<IdentityCheck>& out);
void add_convolution(std::vector<IdentityCheck>& out);
void add_weyl(std::vector<IdentityCheck>& out);

// Shared driver helpers.

inline bool symbolic(const DriverContext& ctx) { return ctx.mode == Mode::Symbolic; }

/// Numeric: the deterministic coefficient grid (plus seeded extras).
/// Symbolic: the single point (a1, b1, a2, b2) of indeterminates.
std::vector<Coefficients> coefficient_points(const DriverContext& ctx);

/// Nonzero c values usable as c1/c2 in a change of parameters.
std::vector<Target> transform_targets(const DriverContext& ctx);

/// Values of b for the a = 1 operator identities.
std::vector<Scalar> weyl_b_values(const DriverContext& ctx);
std::vector<unsigned> weyl_r_values(const DriverContext& ctx);

/// 1..max(1, n): ranges over positive parameters keep their base case.
inline unsigned at_least_one(unsigned n) { return std::max(1u, n); }

std::string grid_label(const DriverContext& ctx, const std::string& ranges);

/// "name=value" pairs joined by spaces.
std::string kv(std::initializer_list<std::pair<const char*, long>> values);

inline Scalar S(long p, long k) { return Scalar(stirling2(p, k)); }
inline Scalar s1(long p, long k) { return Scalar(stirling1_unsigned(p, k)); }
inline Scalar B(long n, long k) { return Scalar(binom_int(n, k)); }
inline Scalar pw(const Scalar& x, long e) { return power_scalar(x, static_cast<unsigned>(e)); }
inline Scalar sgn(long e, const Scalar& v) { return e % 2 == 0 ? v : -v; }
inline Scalar fact(long n) { return Scalar(factorial(static_cast<unsigned>(n))); }

}  // namespace gsn::catalog
