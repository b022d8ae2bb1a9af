#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsn/params.hpp"
#include "gsn/scalar.hpp"

namespace gsn {

enum class TableKind { Stirling2, Stirling1Unsigned, Eulerian, GEN, GSN };
enum class Route { Recurrence, Explicit, Conversion };

std::string_view to_string(TableKind kind);
std::string_view to_string(Route route);
TableKind parse_table_kind(std::string_view text);
Route parse_route(std::string_view text);

/// A computed triangle: rows[p][k], with every entry outside the stored
/// range read as zero. For GSN/GEN tables `params` describes the family;
/// its p() is the index of the last row.
struct NumberTable {
  TableKind kind = TableKind::GSN;
  std::optional<ParamSpec> params;
  std::vector<std::vector<Scalar>> rows;
  Route route = Route::Explicit;

  Scalar at(long p, long k) const;
  std::size_t row_count() const noexcept { return rows.size(); }

  friend bool operator==(const NumberTable&, const NumberTable&) = default;
};

}  // namespace gsn
