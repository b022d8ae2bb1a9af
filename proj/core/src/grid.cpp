#include "gsn/grid.hpp"

#include <random>

namespace gsn::grid {

namespace {

struct Shape {
  unsigned r, p;
  std::vector<std::pair<unsigned, unsigned>> factors;  // (r_s, p_s)
};

std::vector<Shape> shapes() {
  const std::vector<std::vector<std::pair<unsigned, unsigned>>> factor_shapes{
      {},
      {{1, 1}},
      {{1, 2}},
      {{2, 1}},
      {{2, 2}},
      {{1, 1}, {1, 1}},
      {{1, 1}, {2, 1}},
      {{2, 2}, {1, 2}},
  };
  std::vector<Shape> out;
  for (unsigned r = 0; r <= 3; ++r)
    for (unsigned p = 0; p <= 3; ++p)
      for (const auto& fs : factor_shapes) out.push_back({r, p, fs});
  return out;
}

constexpr unsigned kPointsPerShape = 10;

// Raw engine output keeps the sequence identical across standard libraries.
const Rational& pick(std::mt19937_64& rng, const std::vector<Rational>& values) {
  return values[rng() % values.size()];
}

ParamSpec draw(const Shape& s, std::mt19937_64& rng) {
  const auto& v = general_values();
  std::vector<Factor> factors;
  Scalar a = pick(rng, v);
  Scalar b = pick(rng, v);
  for (const auto& [rs, ps] : s.factors) {
    Scalar alpha = pick(rng, v);
    Scalar beta = pick(rng, v);
    factors.push_back(Factor{alpha, beta, rs, ps});
  }
  return ParamSpec(a, b, s.r, s.p, std::move(factors));
}

}  // namespace

const std::vector<Rational>& general_values() {
  static const std::vector<Rational> v{Rational(-2), Rational(-1, 2), Rational(0), Rational(1, 2),
                                       Rational(1),  Rational(2),     Rational(3)};
  return v;
}

const std::vector<Rational>& bivariate_values() {
  static const std::vector<Rational> v{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                       Rational(1, 2), Rational(1), Rational(2),     Rational(3)};
  return v;
}

std::vector<ParamSpec> general(std::optional<std::uint64_t> seed, unsigned extra) {
  const auto all = shapes();
  std::vector<ParamSpec> out;
  std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
  for (const auto& s : all)
    for (unsigned i = 0; i < kPointsPerShape; ++i) out.push_back(draw(s, rng));
  if (seed) {
    std::mt19937_64 extra_rng(*seed);
    for (unsigned i = 0; i < extra; ++i) out.push_back(draw(all[extra_rng() % all.size()], extra_rng));
  }
  return out;
}

std::vector<Coefficients> bivariate(unsigned count, std::optional<std::uint64_t> seed, unsigned extra) {
  const auto& v = bivariate_values();
  std::vector<Coefficients> out;
  if (count > 0) out.push_back(Coefficients::standard());
  for (unsigned i = 0; out.size() < count; ++i)
    out.push_back({v[i % 8], v[(3 * i + 1) % 8], v[(5 * i + 2) % 8], v[(7 * i + 5) % 8]});
  if (seed) {
    std::mt19937_64 rng(*seed);
    for (unsigned i = 0; i < extra; ++i) {
      Scalar a1 = v[rng() % 8];
      Scalar b1 = v[rng() % 8];
      Scalar a2 = v[rng() % 8];
      Scalar b2 = v[rng() % 8];
      out.push_back({a1, b1, a2, b2});
    }
  }
  return out;
}

const std::vector<Target>& targets() {
  static const std::vector<Target> t{
      Target::standard(),
      {Scalar(2), Scalar(-1), Scalar(Rational(1, 2)), Scalar(3)},
      {Scalar(-1), Scalar(Rational(1, 2)), Scalar(3), Scalar(-2)},
  };
  return t;
}

}  // namespace gsn::grid
