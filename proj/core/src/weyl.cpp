#include "gsn/weyl.hpp"

#include <sstream>
#include <stdexcept>

#include "gsn/exact.hpp"
#include "gsn/gsn.hpp"

namespace gsn {

WeylWord WeylWord::term(unsigned xpow, unsigned dpow, Scalar coefficient) {
  WeylWord w;
  w.add(xpow, dpow, coefficient);
  return w;
}

Scalar WeylWord::coefficient(unsigned xpow, unsigned dpow) const {
  auto it = terms_.find({xpow, dpow});
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool WeylWord::is_diagonal() const noexcept {
  for (const auto& [key, c] : terms_)
    if (key.first != key.second) return false;
  return true;
}

void WeylWord::add(unsigned xpow, unsigned dpow, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({xpow, dpow}, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string WeylWord::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (key.first > 0) os << "*x^" << key.first;
    if (key.second > 0) os << "*D^" << key.second;
  }
  return os.str();
}

WeylWord weyl_mul(const WeylWord& u, const WeylWord& v) {
  WeylWord out;
  for (const auto& [ku, cu] : u.terms()) {
    const auto [a, b] = ku;
    for (const auto& [kv, cv] : v.terms()) {
      const auto [c, d] = kv;
      const Scalar coeff = cu * cv;
      // D^b x^c = sum_i binom(b,i) c(c-1)...(c-i+1) x^{c-i} D^{b-i}
      Rational falling(1);
      for (unsigned i = 0; i <= std::min(b, c); ++i) {
        if (i > 0) falling *= Rational(c - i + 1);
        out.add(a + c - i, b + d - i, coeff * Scalar(binom_int(b, i) * falling));
      }
    }
  }
  return out;
}

WeylWord operator*(const WeylWord& u, const WeylWord& v) { return weyl_mul(u, v); }

WeylWord operator+(const WeylWord& u, const WeylWord& v) {
  WeylWord out = u;
  for (const auto& [key, c] : v.terms()) out.add(key.first, key.second, c);
  return out;
}

WeylWord weyl_power(const WeylWord& u, unsigned p) {
  WeylWord out = WeylWord::identity();
  for (unsigned i = 0; i < p; ++i) out = weyl_mul(out, u);
  return out;
}

WeylWord operator_lhs(const Scalar& b, unsigned r) {
  WeylWord w;
  const Rational rf = factorial(r);
  for (unsigned j = 0; j <= r; ++j)
    w.add(j, j, Scalar(rf / factorial(j)) * binom_scalar(b, r - j));
  return w;
}

bool verify_operator_identity(const Scalar& b, unsigned r, unsigned p) {
  const WeylWord w = weyl_power(operator_lhs(b, r), p);
  if (!w.is_diagonal()) return false;
  const ParamSpec params(1, b, r, p);
  const auto row = gsn_row(params);
  for (const auto& [key, c] : w.terms())
    if (key.first >= row.size()) return false;
  for (unsigned k = 0; k < row.size(); ++k)
    if (!(w.coefficient(k, k) == row[k])) return false;
  return true;
}

std::vector<std::vector<Scalar>> recurrence_51_rows(const Scalar& b, unsigned r, unsigned last_row,
                                                    const std::vector<Factor>& factors) {
  const ParamSpec base(1, b, r, 0, factors);
  const unsigned sigma = base.sigma();
  std::vector<Scalar> values;
  for (unsigned n = 0; n <= sigma; ++n) values.push_back(product_value(base, Scalar(n)));
  auto row = forward_differences_at_zero(values);
  for (unsigned k = 0; k < row.size(); ++k) row[k] = row[k] * Scalar(base.scale() / factorial(k));

  std::vector<std::vector<Scalar>> rows{row};
  const Scalar rf(factorial(r));
  for (unsigned p = 1; p <= last_row; ++p) {
    const auto& prev = rows.back();
    std::vector<Scalar> next(r * p + sigma + 1);
    for (long k = 0; k < static_cast<long>(next.size()); ++k) {
      Scalar sum(0);
      for (long t = 0; t <= static_cast<long>(r); ++t) {
        const long idx = k - t;
        if (idx < 0 || idx >= static_cast<long>(prev.size())) continue;
        sum += Scalar(factorial(static_cast<unsigned>(t)).inverse()) *
               binom_scalar(b + Scalar(k - t), r - static_cast<unsigned>(t)) * prev[idx];
      }
      next[k] = rf * sum;
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

Scalar recurrence_51(const Scalar& b, unsigned r, unsigned p, long k, const std::vector<Factor>& factors) {
  if (p == 0) throw std::invalid_argument("recurrence_51: p must be at least 1");
  const auto rows = recurrence_51_rows(b, r, p, factors);
  const auto& row = rows.back();
  if (k < 0 || k >= static_cast<long>(row.size())) return Scalar(0);
  return row[static_cast<std::size_t>(k)];
}

}  // namespace gsn
