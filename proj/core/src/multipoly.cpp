#include "gsn/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "gsn/errors.hpp"

namespace gsn {

namespace {

struct NameTable {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;

  NameTable() {
    for (const char* n : {"a", "b", "a1", "b1", "a2", "b2", "c1", "d1", "c2", "d2", "n", "z", "x"}) add(n);
  }
  VarId add(std::string_view name) {
    const auto id = static_cast<VarId>(names.size());
    names.emplace_back(name);
    ids.emplace(names.back(), id);
    return id;
  }
};

NameTable& table() {
  static NameTable t;
  return t;
}

}  // namespace

VarId Indeterminates::intern(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.ids.find(std::string(name)); it != t.ids.end()) return it->second;
  return t.add(name);
}

const std::string& Indeterminates::name(VarId id) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.names.at(id);
}

// ---------------------------------------------------------------------------

Monomial Monomial::of(VarId var, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.powers_.emplace_back(var, exponent);
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::exponent(VarId var) const noexcept {
  for (const auto& [v, e] : powers_)
    if (v == var) return e;
  return 0;
}

Monomial Monomial::without(VarId var) const {
  Monomial m;
  for (const auto& [v, e] : powers_) {
    if (v == var) continue;
    m.powers_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
      m.powers_.push_back(*i++);
    } else if (i == a.powers_.end() || j->first < i->first) {
      m.powers_.push_back(*j++);
    } else {
      m.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  const std::size_t n = std::min(pa.size(), pb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first;
    if (pa[i].second != pb[i].second) return pa[i].second > pb[i].second;
  }
  return pa.size() > pb.size();
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

MultiPoly::MultiPoly(const Rational& coefficient, Monomial monomial) {
  if (!coefficient.is_zero()) terms_.emplace(std::move(monomial), coefficient);
}

MultiPoly MultiPoly::variable(std::string_view name) {
  return MultiPoly(Rational(1), Monomial::of(Indeterminates::intern(name)));
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned MultiPoly::degree_in(VarId var) const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
  return d;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.powers()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarId var) const {
  std::vector<MultiPoly> out(degree_in(var) + 1);
  for (const auto& [m, c] : terms_) out[m.exponent(var)].add_term(m.without(var), c);
  return out;
}

MultiPoly MultiPoly::substitute(VarId var, const MultiPoly& value) const {
  std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out += MultiPoly(c, m.without(var)) * powers[e];
  }
  return out;
}

MultiPoly MultiPoly::substitute(VarId var, const Rational& value) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    out.add_term(m.without(var), e == 0 ? c : c * value.pow(e));
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Rational mag = c.abs();
    bool need_star = false;
    if (m.is_one() || !mag.is_one()) {
      os << mag;
      need_star = true;
    }
    for (const auto& [v, e] : m.powers()) {
      if (need_star) os << '*';
      os << Indeterminates::name(v);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for + - * / ^ and parentheses. Division is only
// allowed by constants.

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed polynomial '" + std::string(text_) + "': " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  MultiPoly term() {
    MultiPoly v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        v *= d.constant_term().inverse();
      } else {
        return v;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return MultiPoly::variable(text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace gsn
