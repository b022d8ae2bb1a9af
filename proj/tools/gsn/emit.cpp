#include "gsn/emit.hpp"

#include <algorithm>
#include <sstream>

#include "gsn/errors.hpp"
#include "json.hpp"

namespace gsn::cli {

using json = nlohmann::ordered_json;

namespace {

void put(NumberTable& table, long p, long k, Scalar value) {
  if (p < 0 || k < 0) throw ParseError("negative index in table");
  auto& rows = table.rows;
  if (static_cast<long>(rows.size()) <= p) rows.resize(static_cast<std::size_t>(p) + 1);
  auto& row = rows[static_cast<std::size_t>(p)];
  if (static_cast<long>(row.size()) != k) throw ParseError("table entries must be listed in row order");
  row.push_back(std::move(value));
}

long parse_index(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad index '" + s + "'");
  return std::stol(s);
}

}  // namespace

std::string emit_csv(const NumberTable& table) {
  std::ostringstream os;
  os << "p,k,value\n";
  for (std::size_t p = 0; p < table.rows.size(); ++p)
    for (std::size_t k = 0; k < table.rows[p].size(); ++k) os << p << ',' << k << ',' << table.rows[p][k].to_string() << '\n';
  return os.str();
}

NumberTable parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "p,k,value") throw ParseError("csv: expected header p,k,value");
  NumberTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("csv: expected p,k,value in '" + line + "'");
    put(table, parse_index(line.substr(0, c1)), parse_index(line.substr(c1 + 1, c2 - c1 - 1)),
        Scalar::parse(line.substr(c2 + 1)));
  }
  return table;
}

std::string emit_json(const NumberTable& table, const std::string& title) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(std::move(r));
  }
  json doc{{"family", title},
           {"kind", std::string(to_string(table.kind))},
           {"route", std::string(to_string(table.route))},
           {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

NumberTable parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  NumberTable table;
  if (doc.contains("kind")) table.kind = parse_table_kind(doc["kind"].get<std::string>());
  if (doc.contains("route")) table.route = parse_route(doc["route"].get<std::string>());
  for (const auto& r : doc.at("rows")) {
    std::vector<Scalar> row;
    for (const auto& v : r) row.push_back(Scalar::parse(v.get<std::string>()));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string emit_markdown(const NumberTable& table, const std::string& title) {
  std::size_t width = 0;
  for (const auto& row : table.rows) width = std::max(width, row.size());
  std::ostringstream os;
  os << "**" << title << "**\n\n| p\\k |";
  for (std::size_t k = 0; k < width; ++k) os << ' ' << k << " |";
  os << "\n|---|";
  for (std::size_t k = 0; k < width; ++k) os << "---|";
  os << '\n';
  for (std::size_t p = 0; p < table.rows.size(); ++p) {
    os << "| " << p << " |";
    for (std::size_t k = 0; k < width; ++k) {
      if (k < table.rows[p].size())
        os << ' ' << table.rows[p][k].to_string() << " |";
      else
        os << "  |";
    }
    os << '\n';
  }
  return os.str();
}

Linearization parse_linearization(const std::string& text) {
  if (text == "rows") return Linearization::Rows;
  if (text == "column") return Linearization::Column;
  if (text == "diagonal") return Linearization::Diagonal;
  throw ParseError("unknown linearization '" + text + "' (rows, column, diagonal)");
}

std::vector<Scalar> linearize(const NumberTable& table, Linearization how, long k0, std::size_t count) {
  std::vector<Scalar> out;
  for (const auto& row : table.rows) {
    if (out.size() >= count) break;
    const long n = static_cast<long>(row.size());
    switch (how) {
      case Linearization::Rows:
        for (const auto& v : row)
          if (out.size() < count) out.push_back(v);
        break;
      case Linearization::Column:
        if (k0 < n) out.push_back(row[static_cast<std::size_t>(k0)]);
        break;
      case Linearization::Diagonal:
        if (k0 < n) out.push_back(row[static_cast<std::size_t>(n - 1 - k0)]);
        break;
    }
  }
  return out;
}

std::string emit_bfile(const std::vector<Scalar>& terms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_constant() || !terms[i].to_rational().is_integer())
      throw NonIntegerValue("b-file term " + std::to_string(i + 1) + " is " + terms[i].to_string() +
                            ", b-files hold integers only");
    os << i + 1 << ' ' << terms[i].to_rational().to_string() << '\n';
  }
  return os.str();
}

}  // namespace gsn::cli
