#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsn/params.hpp"
#include "gsn/scalar.hpp"

namespace gsn {

/// Normal-ordered element of the Weyl algebra: sum of c * x^a D^b with D x = x D + 1.
class WeylWord {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (x power, D power)
  using TermMap = std::map<Key, Scalar>;

  WeylWord() = default;
  static WeylWord identity() { return term(0, 0, 1); }
  static WeylWord term(unsigned xpow, unsigned dpow, Scalar coefficient);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of x^xpow D^dpow (zero when absent).
  Scalar coefficient(unsigned xpow, unsigned dpow) const;
  /// True when every term has xpow == dpow.
  bool is_diagonal() const noexcept;

  void add(unsigned xpow, unsigned dpow, const Scalar& coefficient);
  std::string to_string() const;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;

 private:
  TermMap terms_;
};

/// x^a D^b * x^c D^d = sum_i binom(b,i) c(c-1)...(c-i+1) x^{a+c-i} D^{b+d-i}.
WeylWord weyl_mul(const WeylWord& u, const WeylWord& v);
WeylWord operator*(const WeylWord& u, const WeylWord& v);
WeylWord operator+(const WeylWord& u, const WeylWord& v);
/// u^p by p-1 successive multiplications.
WeylWord weyl_power(const WeylWord& u, unsigned p);

/// r! sum_{j=0}^{r} binom(b, r-j)/j! x^j D^j.
WeylWord operator_lhs(const Scalar& b, unsigned r);

/// operator_lhs(b, r)^p is diagonal and its x^k D^k coefficient is
/// S_{1,b,r}(p, k) for every k.
bool verify_operator_identity(const Scalar& b, unsigned r, unsigned p);

/// r! sum_{t=0}^{r} (1/t!) binom(b+k-t, r-t) S(p-1, k-t) for the a = 1 family
/// with the given extra factors. The p = 0 row comes from the binomial-basis
/// expansion of the factor product alone. Throws std::invalid_argument for p = 0.
Scalar recurrence_51(const Scalar& b, unsigned r, unsigned p, long k, const std::vector<Factor>& factors = {});
/// Rows 0..last_row by the same recurrence.
std::vector<std::vector<Scalar>> recurrence_51_rows(const Scalar& b, unsigned r, unsigned last_row,
                                                    const std::vector<Factor>& factors = {});

}  // namespace gsn
