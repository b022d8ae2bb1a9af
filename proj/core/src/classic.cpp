#include "gsn/classic.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gsn/exact.hpp"

namespace gsn {

namespace {

using Row = std::vector<Rational>;
using NextRow = std::function<Row(const Row& previous, long p)>;

/// Row cache filled on demand; rows[p] has p+1 entries.
class TriangleCache {
 public:
  explicit TriangleCache(NextRow next) : next_(std::move(next)) { rows_.push_back(Row{Rational(1)}); }

  Rational get(long p, long k) {
    if (p < 0 || k < 0 || k > p) return Rational(0);
    std::lock_guard lock(mutex_);
    while (static_cast<long>(rows_.size()) <= p)
      rows_.push_back(next_(rows_.back(), static_cast<long>(rows_.size())));
    return rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
  }

 private:
  NextRow next_;
  std::mutex mutex_;
  std::vector<Row> rows_;
};

Rational at(const Row& row, long k) {
  if (k < 0 || k >= static_cast<long>(row.size())) return Rational(0);
  return row[static_cast<std::size_t>(k)];
}

TriangleCache& stirling2_cache() {
  static TriangleCache cache([](const Row& prev, long p) {
    Row row(static_cast<std::size_t>(p) + 1);
    for (long k = 0; k <= p; ++k) row[k] = at(prev, k - 1) + Rational(k) * at(prev, k);
    return row;
  });
  return cache;
}

TriangleCache& stirling1_cache() {
  static TriangleCache cache([](const Row& prev, long p) {
    Row row(static_cast<std::size_t>(p) + 1);
    for (long k = 0; k <= p; ++k) row[k] = at(prev, k - 1) + Rational(p - 1) * at(prev, k);
    return row;
  });
  return cache;
}

// Permutations of p elements by number of descents, E(p, j).
TriangleCache& descent_cache() {
  static TriangleCache cache([](const Row& prev, long p) {
    Row row(static_cast<std::size_t>(p) + 1);
    for (long j = 0; j <= p; ++j) row[j] = Rational(j + 1) * at(prev, j) + Rational(p - j) * at(prev, j - 1);
    return row;
  });
  return cache;
}

}  // namespace

Rational stirling2(long p, long k) { return stirling2_cache().get(p, k); }

Rational stirling2_explicit(long p, long k) {
  if (p < 0 || k < 0 || k > p) return Rational(0);
  Rational sum(0);
  for (long j = 0; j <= k; ++j) {
    Rational term = binom_int(k, j) * Rational(k - j).pow(static_cast<unsigned>(p));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum / factorial(static_cast<unsigned>(k));
}

Rational stirling1_unsigned(long p, long k) { return stirling1_cache().get(p, k); }

Rational stirling1_unsigned_product(long p, long k) {
  if (p < 0 || k < 0 || k > p) return Rational(0);
  Row poly{Rational(1)};
  for (long i = 0; i < p; ++i) {
    Row next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] += poly[d] * Rational(i);
    }
    poly = std::move(next);
  }
  return poly[static_cast<std::size_t>(k)];
}

Rational eulerian(long p, long i) {
  if (p < 0 || i < 0 || i > p) return Rational(0);
  if (p == 0) return Rational(1);
  return descent_cache().get(p, i - 1);
}

Rational eulerian_explicit(long p, long i) {
  if (p < 0 || i < 0 || i > p) return Rational(0);
  Rational sum(0);
  for (long j = 0; j <= i; ++j) {
    Rational term = binom_int(p + 1, j) * Rational(i - j).pow(static_cast<unsigned>(p));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

NumberTable classic_table(TableKind kind, unsigned last_row, Route route) {
  if (route == Route::Conversion) throw std::invalid_argument("classic_table: no conversion route");
  std::function<Rational(long, long)> value;
  const bool rec = route == Route::Recurrence;
  switch (kind) {
    case TableKind::Stirling2:
      value = rec ? stirling2 : stirling2_explicit;
      break;
    case TableKind::Stirling1Unsigned:
      value = rec ? stirling1_unsigned : stirling1_unsigned_product;
      break;
    case TableKind::Eulerian:
      value = rec ? eulerian : eulerian_explicit;
      break;
    default:
      throw std::invalid_argument("classic_table: not a classical kind");
  }
  NumberTable table;
  table.kind = kind;
  table.route = route;
  for (long p = 0; p <= static_cast<long>(last_row); ++p) {
    std::vector<Scalar> row;
    for (long k = 0; k <= p; ++k) row.emplace_back(value(p, k));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace gsn
