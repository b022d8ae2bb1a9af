#include <sstream>

#include "gsn/registry.hpp"
#include "json.hpp"

namespace gsn {

using json = nlohmann::ordered_json;

std::string report_json(const std::vector<VerifyReport>& reports, bool include_timing) {
  json list = json::array();
  std::uint64_t cases = 0, failures = 0, passed = 0;
  for (const auto& r : reports) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back({{"assignment", f.assignment}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    json item{{"id", r.id},
              {"mode", std::string(to_string(r.mode))},
              {"grid", r.grid},
              {"cases", r.cases},
              {"status", r.passed() ? "pass" : "fail"},
              {"failures", std::move(fails)}};
    if (include_timing) item["wall_time_ms"] = static_cast<double>(r.wall_time.count()) / 1e6;
    list.push_back(std::move(item));
    cases += r.cases;
    failures += r.failures.size();
    passed += r.passed() ? 1 : 0;
  }
  json doc{{"reports", std::move(list)},
           {"summary",
            {{"identities", reports.size()},
             {"passed", passed},
             {"failed", reports.size() - passed},
             {"cases", cases},
             {"failures", failures}}}};
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<VerifyReport>& reports, bool include_timing) {
  std::ostringstream os;
  std::uint64_t cases = 0;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.id << ' ' << to_string(r.mode) << " cases=" << r.cases;
    if (include_timing) os << " ms=" << r.wall_time.count() / 1000000;
    os << " grid=\"" << r.grid << "\"\n";
    for (const auto& f : r.failures) os << "  at " << f.assignment << ": lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
    cases += r.cases;
    passed += r.passed() ? 1 : 0;
  }
  os << passed << '/' << reports.size() << " identities passed, " << cases << " cases\n";
  return os.str();
}

}  // namespace gsn
