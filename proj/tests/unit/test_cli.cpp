#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gsn/bivariate.hpp"
#include "gsn/cli.hpp"
#include "gsn/emit.hpp"
#include "gsn/gsn.hpp"
#include "support.hpp"

using namespace gsn;
using gsn::cli::Environment;
using testing_support::ints;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, Environment env = {}) {
  std::ostringstream out, err;
  int code = gsn::cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kGsnt1{"--a1", "1", "--b1", "1", "--a2", "1", "--b2", "0", "--p2", "1"};
const std::vector<std::string> kGsnt2{"--a1", "1", "--b1", "1", "--a2", "1", "--b2", "0", "--p2", "2"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& family,
                              std::vector<std::string> tail = {}) {
  head.insert(head.end(), family.begin(), family.end());
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) : path_(std::string(::testing::TempDir()) + "gsn_cli_" + std::to_string(counter_++)) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

}  // namespace

TEST(CliTriangle, GoldenCsv) {
  auto r = run(with({"triangle"}, kGsnt1, {"--rows", "2", "--format", "csv"}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "p,k,value\n0,0,0\n0,1,1\n1,0,0\n1,1,2\n1,2,1\n2,0,0\n2,1,4\n2,2,5\n2,3,1\n");
}

TEST(CliTriangle, RowsZero) {
  auto r = run(with({"triangle"}, kGsnt1, {"--rows", "0"}));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p,k,value\n0,0,0\n0,1,1\n");
}

TEST(CliTriangle, Markdown) {
  auto r = run({"triangle", "--a1", "1", "--b1", "2", "--a2", "1", "--b2", "1", "--p2", "2", "--rows", "2", "--format",
                "markdown"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| 0 | 1 | 3 | 1 |  |  |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| 1 | 2 | 10 | 7 | 1 |  |"), std::string::npos);
  EXPECT_NE(r.out.find("| 2 | 4 | 32 | 38 | 12 | 1 |"), std::string::npos);
}

TEST(CliTriangle, GeneralFactor) {
  auto r = run({"triangle", "--a", "1", "--b", "0", "--r", "2", "--factor", "1,1,1,2", "--rows", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto t = cli::parse_json(r.out);
  ParamSpec fam(1, 0, 2, 0, {{1, 1, 1, 2}});
  ASSERT_EQ(t.rows.size(), 4u);
  for (unsigned p = 0; p <= 3; ++p) EXPECT_EQ(t.rows[p], gsn_row(fam.with_p(p)));
  auto gen = run({"triangle", "--a", "1", "--b", "0", "--r", "2", "--factor", "1,1,1,2", "--rows", "2", "--kind", "gen"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  EXPECT_EQ(cli::parse_csv(gen.out).rows[2], gen_row(fam.with_p(2)));
}

TEST(CliTriangle, CsvAndJsonAreLossless) {
  auto table = triangle({testing_support::Q("-1/2"), 3, 2, testing_support::Q("1/3")}, 2, 4);
  EXPECT_EQ(cli::parse_csv(cli::emit_csv(table)).rows, table.rows);
  EXPECT_EQ(cli::parse_json(cli::emit_json(table, "t")).rows, table.rows);
  auto sym = triangle(Coefficients::symbolic(), 1, 2);
  EXPECT_EQ(cli::parse_csv(cli::emit_csv(sym)).rows, sym.rows);
  auto r = run({"triangle", "--symbolic", "a1,b1", "--a2", "1", "--b2", "0", "--p2", "1", "--rows", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto back = cli::parse_csv(r.out);
  EXPECT_EQ(back.rows, triangle({testing_support::X("a1"), testing_support::X("b1"), 1, 0}, 1, 2).rows);
}

TEST(CliTriangle, Errors) {
  EXPECT_EQ(run(with({"triangle"}, {"--a1", "1/x"})).code, 2);
  EXPECT_EQ(run({"triangle", "--a1", "1", "--a", "1"}).code, 2);
  EXPECT_EQ(run({"triangle", "--a1", "1", "--symbolic", "a1"}).code, 2);
  EXPECT_EQ(run({"triangle", "--symbolic", "q7"}).code, 2);
  EXPECT_EQ(run({"triangle", "--factor", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"triangle", "--format", "pdf"}).code, 2);
  EXPECT_EQ(run({"triangle", "--no-such-flag"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliEval, Examples) {
  auto r = run(with({"eval"}, kGsnt2, {"--p", "2", "--k", "2"}));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "14\n");
  EXPECT_EQ(run(with({"eval"}, kGsnt2, {"--p", "2", "--k", "-1"})).out, "0\n");
  auto s = run({"eval", "--symbolic", "a1,b1", "--p1", "2", "--p2", "0", "--k", "0"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, "b1^2\n");
  EXPECT_EQ(run({"eval", "--a", "1/2", "--b", "3/2", "--r", "2", "--p", "2", "--k", "4"}).out, "1/16\n");
  EXPECT_EQ(run({"eval", "--p", "2"}).code, 2);
}

TEST(CliVerify, Examples) {
  auto r = run({"verify", "--id", "EQ-5.2", "--b", "1", "--r", "2", "--max-p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reports"][0]["id"], "EQ-5.2");
  EXPECT_EQ(j["reports"][0]["status"], "pass");
  EXPECT_EQ(run({"verify", "--id", "EQ-9.9"}).code, 2);
  EXPECT_EQ(run({"verify", "--id", "EQ-3.3", "--mode", "symbolic"}).code, 2);
  EXPECT_EQ(run({"verify", "--mode", "sideways"}).code, 2);
  auto t = run({"verify", "--id", "EQ-3.27", "--format", "text", "--max-p", "2"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("PASS EQ-3.27 numeric", 0), 0u) << t.out;
}

TEST(CliVerify, Deterministic) {
  std::vector<std::string> args{"verify", "--id", "all", "--max-p", "1", "--max-degree", "3", "--points", "2",
                                "--seed", "5", "--threads", "2"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  args.back() = "1";
  EXPECT_EQ(run(args).out, a.out);
}

TEST(CliBfile, Examples) {
  auto r = run(with({"bfile"}, kGsnt1, {"--linearization", "rows", "--count", "6"}));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 0\n2 1\n3 0\n4 2\n5 1\n6 0\n");
  auto d = run(with({"bfile"}, kGsnt1, {"--linearization", "diagonal", "--count", "8"}));
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out, "1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n7 1\n8 1\n");
  auto c = run(with({"bfile"}, kGsnt1, {"--linearization", "column", "--k", "1", "--count", "4"}));
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, "1 1\n2 2\n3 4\n4 8\n");
  EXPECT_EQ(run({"bfile", "--a1", "1", "--b1", "1/2", "--a2", "1", "--b2", "0", "--p2", "1", "--count", "5"}).code, 2);
  EXPECT_EQ(run({"bfile", "--symbolic", "a1", "--count", "3"}).code, 2);
}

TEST(CliWeyl, Examples) {
  auto r = run({"weyl", "--b", "1/2", "--r", "2", "--p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  auto j = run({"weyl", "--b", "-1", "--r", "3", "--p", "2", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_TRUE(nlohmann::json::parse(j.out).is_object());
  EXPECT_EQ(run({"weyl", "--b", "b", "--r", "1", "--p", "2"}).code, 0);
}

TEST(CliConfig, DegreeGuard) {
  auto big = with({"triangle"}, kGsnt1, {"--rows", "5"});
  EXPECT_EQ(run(big).code, 0);
  auto guarded = big;
  guarded.insert(guarded.begin(), {"--degree-guard", "4"});
  EXPECT_EQ(run(guarded).code, 3);
  EXPECT_EQ(run(big, Environment{"4", std::nullopt}).code, 3);
  auto lifted = big;
  lifted.insert(lifted.begin(), {"--degree-guard", "10"});
  EXPECT_EQ(run(lifted, Environment{"4", std::nullopt}).code, 0);
  EXPECT_EQ(run(big, Environment{"x", std::nullopt}).code, 2);
  EXPECT_EQ(run({"eval", "--a", "1", "--b", "0", "--r", "9", "--p", "9", "--k", "0"}).code, 3);
  EXPECT_EQ(run({"weyl", "--b", "1", "--r", "9", "--p", "9"}).code, 3);
  EXPECT_EQ(run({"verify", "--id", "EQ-3.23", "--max-degree", "100"}).code, 3);
  EXPECT_EQ(run(with({"bfile"}, kGsnt1, {"--count", "100000"})).code, 3);
}

TEST(CliConfig, FilePrecedence) {
  TempFile cfg("# defaults\ndegree_guard = 4\nformat = markdown\n");
  auto big = with({"triangle"}, kGsnt1, {"--rows", "5"});
  EXPECT_EQ(run(with({"--config", cfg.path()}, big)).code, 3);
  EXPECT_EQ(run(big, Environment{std::nullopt, cfg.path()}).code, 3);
  EXPECT_EQ(run(big, Environment{"20", cfg.path()}).code, 0);
  auto small = run(with({"--config", cfg.path(), "triangle"}, kGsnt1, {"--rows", "1"}));
  ASSERT_EQ(small.code, 0);
  EXPECT_EQ(small.out.rfind("**", 0), 0u) << small.out;
  auto flag = run(with({"--config", cfg.path(), "triangle"}, kGsnt1, {"--rows", "1", "--format", "csv"}));
  EXPECT_EQ(flag.out.rfind("p,k,value", 0), 0u);
  EXPECT_EQ(run(with({"--config", "/nonexistent/gsn.cfg", "triangle"}, kGsnt1)).code, 2);
  TempFile broken("degree_guard\n");
  EXPECT_EQ(run(with({"--config", broken.path(), "triangle"}, kGsnt1)).code, 2);
}

TEST(CliEmit, Linearize) {
  auto t = triangle({1, 1, 1, 0}, 1, 3);
  EXPECT_EQ(cli::linearize(t, cli::Linearization::Rows, 0, 4), ints({0, 1, 0, 2}));
  EXPECT_EQ(cli::linearize(t, cli::Linearization::Diagonal, 1, 10), ints({0, 2, 5, 9}));
  EXPECT_EQ(cli::linearize(t, cli::Linearization::Column, 3, 10), ints({1, 9}));
  EXPECT_EQ(cli::emit_bfile(ints({5, -3})), "1 5\n2 -3\n");
  EXPECT_THROW(cli::emit_bfile({Scalar(testing_support::Q("1/2"))}), cli::NonIntegerValue);
  EXPECT_THROW(cli::parse_linearization("spiral"), std::invalid_argument);
}
