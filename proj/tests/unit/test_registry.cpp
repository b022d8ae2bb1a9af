#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>

#include "gsn/errors.hpp"
#include "gsn/registry.hpp"

using namespace gsn;

namespace {

std::vector<std::string> manifest() {
  std::ifstream in(std::string(GSN_TEST_DATA_DIR) + "/identity_manifest.txt");
  std::vector<std::string> ids;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') ids.push_back(line);
  return ids;
}

Bounds tight() {
  Bounds b = Bounds::symbolic_defaults();
  b.max_p = 2;
  b.max_degree = 4;
  b.max_aux = 1;
  b.max_power_sum_m = 2;
  return b;
}

}  // namespace

TEST(Registry, MatchesManifest) {
  auto ids = manifest();
  ASSERT_EQ(ids.size(), 47u);
  std::vector<std::string> registered;
  for (const auto& c : registry()) registered.push_back(c.id);
  EXPECT_EQ(registered, ids);
}

TEST(Registry, EntriesAreComplete) {
  for (const auto& c : registry()) {
    EXPECT_FALSE(c.description.empty()) << c.id;
    EXPECT_FALSE(c.arity.empty()) << c.id;
    EXPECT_TRUE(c.numeric) << c.id;
    EXPECT_TRUE(static_cast<bool>(c.driver)) << c.id;
    EXPECT_EQ(find_identity(c.id), &c);
  }
  EXPECT_EQ(find_identity("EQ-9.9"), nullptr);
  for (const char* id : {"EQ-3.6", "EQ-3.9", "EQ-3.22", "EQ-3.23", "EQ-3.44", "EQ-2.21", "EQ-2.24", "EQ-5.2"})
    EXPECT_TRUE(find_identity(id)->symbolic) << id;
}

TEST(RunIdentity, Examples) {
  Bounds b;
  b.max_p = 10;
  b.max_degree = 12;
  auto r33 = run_identity("EQ-3.3", Mode::Numeric, b);
  EXPECT_TRUE(r33.passed());
  EXPECT_GT(r33.cases, 0u);

  Bounds b41;
  b41.max_p = 4;
  auto r341 = run_identity("EQ-3.41", Mode::Numeric, b41);
  EXPECT_TRUE(r341.passed());
  EXPECT_GE(r341.cases, 625u);

  Bounds s = Bounds::symbolic_defaults();
  s.max_p = 3;
  auto r36 = run_identity("EQ-3.6", Mode::Symbolic, s);
  EXPECT_TRUE(r36.passed());
  EXPECT_EQ(r36.mode, Mode::Symbolic);
  EXPECT_EQ(r36.id, "EQ-3.6");
}

TEST(RunIdentity, SymbolicConvolutionToDegreeTwelve) {
  Bounds s = Bounds::symbolic_defaults();
  s.max_p = 3;
  s.max_degree = 12;
  auto r = run_identity("EQ-3.23", Mode::Symbolic, s);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.cases, 256u);
}

TEST(RunIdentity, Errors) {
  EXPECT_THROW(run_identity("EQ-9.9", Mode::Numeric, Bounds{}), UnknownIdentity);
  EXPECT_THROW(run_identity("EQ-3.3", Mode::Symbolic, Bounds::symbolic_defaults()), std::invalid_argument);
  EXPECT_THROW(run_identity("EQ-3.23", Mode::Numeric, Bounds{}, 5), DegreeGuardError);
  Bounds big;
  big.max_degree = 80;
  EXPECT_THROW(run_all(Mode::Numeric, big), DegreeGuardError);
}

TEST(RunAll, ZeroBoundsVacuousPass) {
  auto reports = run_all(Mode::Numeric, Bounds::zero());
  EXPECT_EQ(reports.size(), registry().size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << r.id;
    EXPECT_GT(r.cases, 0u) << r.id;
  }
}

TEST(RunAll, SymbolicTightBounds) {
  auto reports = run_all(Mode::Symbolic, tight(), 64, 2);
  std::size_t symbolic = 0;
  for (const auto& c : registry()) symbolic += c.symbolic;
  ASSERT_EQ(reports.size(), symbolic);
  for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.id;
}

TEST(RunAll, OrderIndependentOfThreads) {
  Bounds b = Bounds::zero();
  b.max_p = 2;
  b.max_degree = 4;
  b.param_points = 2;
  b.seed = 99;
  b.random_points = 2;
  auto one = report_json(run_all(Mode::Numeric, b, 64, 1));
  auto three = report_json(run_all(Mode::Numeric, b, 64, 3));
  auto again = report_json(run_all(Mode::Numeric, b, 64, 1));
  EXPECT_EQ(one, three);
  EXPECT_EQ(one, again);
  EXPECT_EQ(one.find("wall_time"), std::string::npos);
}

TEST(Report, JsonShape) {
  VerifyReport ok{"EQ-3.3", Mode::Numeric, "p <= 2", 5, {}, std::chrono::nanoseconds(1500000)};
  VerifyReport bad{"EQ-3.5", Mode::Symbolic, "g", 2, {{"p=1", "1", "2"}}, {}};
  auto j = nlohmann::ordered_json::parse(report_json({ok, bad}));
  ASSERT_EQ(j["reports"].size(), 2u);
  std::vector<std::string> keys;
  for (auto it = j["reports"][0].begin(); it != j["reports"][0].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "mode", "grid", "cases", "status", "failures"}));
  EXPECT_EQ(j["reports"][0]["status"], "pass");
  EXPECT_EQ(j["reports"][1]["status"], "fail");
  EXPECT_EQ(j["reports"][1]["mode"], "symbolic");
  EXPECT_EQ(j["reports"][1]["failures"][0]["lhs"], "1");
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["summary"]["cases"], 7);
  auto timed = nlohmann::ordered_json::parse(report_json({ok}, true));
  EXPECT_TRUE(timed["reports"][0].contains("wall_time_ms"));
  auto text = report_text({ok, bad});
  EXPECT_NE(text.find("PASS EQ-3.3"), std::string::npos);
  EXPECT_NE(text.find("FAIL EQ-3.5"), std::string::npos);
  EXPECT_NE(text.find("1/2 identities passed"), std::string::npos);
}

TEST(CaseSink, CountsAndFailures) {
  CaseSink sink;
  sink.check(Scalar(1), Scalar(1), [] { return std::string("a"); });
  sink.check(Scalar(1), Scalar(2), [] { return std::string("b"); });
  sink.check(false, [] { return std::string("c"); });
  EXPECT_EQ(sink.cases(), 3u);
  ASSERT_EQ(sink.failures().size(), 2u);
  EXPECT_EQ(sink.failures()[0].assignment, "b");
  EXPECT_EQ(sink.failures()[0].rhs, "2");
}

TEST(Modes, Text) {
  EXPECT_EQ(parse_mode("numeric"), Mode::Numeric);
  EXPECT_EQ(parse_mode("symbolic"), Mode::Symbolic);
  EXPECT_EQ(to_string(Mode::Symbolic), "symbolic");
  EXPECT_THROW(parse_mode("fuzzy"), std::invalid_argument);
}
