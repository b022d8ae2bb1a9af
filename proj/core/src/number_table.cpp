#include "gsn/number_table.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace gsn {

namespace {

constexpr std::array<std::pair<TableKind, std::string_view>, 5> kKinds{{
    {TableKind::Stirling2, "stirling2"},
    {TableKind::Stirling1Unsigned, "stirling1"},
    {TableKind::Eulerian, "eulerian"},
    {TableKind::GEN, "gen"},
    {TableKind::GSN, "gsn"},
}};

constexpr std::array<std::pair<Route, std::string_view>, 3> kRoutes{{
    {Route::Recurrence, "recurrence"},
    {Route::Explicit, "explicit"},
    {Route::Conversion, "conversion"},
}};

}  // namespace

std::string_view to_string(TableKind kind) {
  for (const auto& [k, name] : kKinds)
    if (k == kind) return name;
  return "?";
}

std::string_view to_string(Route route) {
  for (const auto& [r, name] : kRoutes)
    if (r == route) return name;
  return "?";
}

TableKind parse_table_kind(std::string_view text) {
  for (const auto& [k, name] : kKinds)
    if (name == text) return k;
  throw std::invalid_argument("unknown table kind: " + std::string(text));
}

Route parse_route(std::string_view text) {
  for (const auto& [r, name] : kRoutes)
    if (name == text) return r;
  throw std::invalid_argument("unknown route: " + std::string(text));
}

Scalar NumberTable::at(long p, long k) const {
  if (p < 0 || k < 0 || static_cast<std::size_t>(p) >= rows.size()) return Scalar(0);
  const auto& row = rows[static_cast<std::size_t>(p)];
  if (static_cast<std::size_t>(k) >= row.size()) return Scalar(0);
  return row[static_cast<std::size_t>(k)];
}

}  // namespace gsn
