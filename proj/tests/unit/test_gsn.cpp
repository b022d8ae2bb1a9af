#include <gtest/gtest.h>

#include "gsn/classic.hpp"
#include "gsn/exact.hpp"
#include "gsn/grid.hpp"
#include "gsn/gsn.hpp"
#include "support.hpp"

using namespace gsn;
using testing_support::ints;
using testing_support::Q;
using testing_support::X;

namespace {

const ParamSpec kGsnt1(1, 1, 1, 2, {{1, 0, 1, 1}});
const ParamSpec kGsnt3(1, 2, 1, 2, {{1, 1, 1, 1}});
const ParamSpec kGsnt4(1, 2, 1, 2, {{1, 1, 1, 2}});

std::vector<Scalar> row_of(const ParamSpec& ps, Scalar (*f)(const ParamSpec&, long)) {
  std::vector<Scalar> out;
  for (long k = 0; k <= static_cast<long>(ps.degree()); ++k) out.push_back(f(ps, k));
  return out;
}

}  // namespace

TEST(ParamSpec, DegreeAndFactors) {
  ParamSpec ps(1, 0, 2, 3, {{1, 0, 1, 2}, {Q("1/2"), 1, 0, 4}, {2, 2, 3, 0}});
  EXPECT_EQ(ps.degree(), 8u);
  EXPECT_EQ(ps.sigma(), 2u);
  EXPECT_EQ(ps.factors().size(), 1u);
  EXPECT_EQ(ps.scale(), Rational(8));
  EXPECT_TRUE(ParamSpec(1, 0, 1, 3, {{1, 1, 0, 2}}).factors().empty());
  EXPECT_EQ(ParamSpec::standard(3).degree(), 3u);
}

TEST(GenExplicit, Examples) {
  EXPECT_EQ(gen_row(ParamSpec::standard(3)), ints({0, 1, 4, 1}));
  EXPECT_EQ(gen_explicit(ParamSpec::standard(0), 0), Scalar(1));
  // (n+1)^2 = binom(n+2,2) + binom(n+1,2).
  EXPECT_EQ(gen_row(ParamSpec(1, 1, 1, 2)), ints({1, 1, 0}));
  EXPECT_EQ(testing_support::from_mpq(oracle::gen_row(testing_support::to_oracle(ParamSpec(1, 1, 1, 2)))),
            ints({1, 1, 0}));
  EXPECT_EQ(gen_explicit(ParamSpec::standard(3), -1), Scalar(0));
  EXPECT_EQ(gen_explicit(ParamSpec::standard(3), 4), Scalar(0));
}

TEST(GenExpansion, Examples) {
  for (unsigned p = 0; p <= 6; ++p) EXPECT_TRUE(verify_gen_expansion(ParamSpec::standard(p)));
  EXPECT_TRUE(verify_gen_expansion(ParamSpec(Q("1/2"), Q("3/2"), 2, 2)));
  EXPECT_TRUE(verify_gen_expansion(ParamSpec(1, 1, 1, 2, {{1, 0, 1, 1}})));
}

TEST(GsnExplicit, Examples) {
  EXPECT_EQ(gsn_row(kGsnt1), ints({0, 4, 5, 1}));
  ParamSpec ps(Q("-1/2"), 3, 2, 2, {{2, Q("1/2"), 1, 2}});
  EXPECT_EQ(gsn_explicit(ps, ps.degree()), Scalar(Q("-1/2").pow(4) * Rational(2).pow(2)));
  EXPECT_EQ(gsn_explicit(kGsnt1, -1), Scalar(0));
  EXPECT_EQ(gsn_explicit(kGsnt1, 4), Scalar(0));
}

TEST(GsnFromGen, Examples) {
  for (long k = 0; k <= 4; ++k) EXPECT_EQ(gsn_from_gen(ParamSpec::standard(4), k), Scalar(stirling2(4, k)));
  EXPECT_EQ(row_of(kGsnt4, gsn_from_gen), ints({4, 32, 38, 12, 1}));
  ParamSpec ps(2, Q("5/2"), 2, 1, {{1, 3, 2, 1}});
  EXPECT_EQ(gsn_from_gen(ps, 0), Scalar((Rational(2) * binom_rational(Q("5/2"), 2)) * (Rational(2) * binom_rational(3, 2))));
  EXPECT_THROW(gsn_from_gen(kGsnt1, 4), std::out_of_range);
  EXPECT_THROW(gsn_from_gen(kGsnt1, -1), std::out_of_range);
}

TEST(GenFromGsn, Examples) {
  EXPECT_EQ(row_of(ParamSpec::standard(3), gen_from_gsn), ints({0, 1, 4, 1}));
  EXPECT_EQ(gen_from_gsn(ParamSpec(1, 0, 2, 2), 0), Scalar(0));
  ParamSpec p1 = kGsnt3.with_p(1);
  auto gen = row_of(p1, gen_explicit);
  auto there = convert_gen_to_gsn(p1, gen);
  EXPECT_EQ(convert_gsn_to_gen(p1, there), gen);
  EXPECT_THROW(gen_from_gsn(p1, 3), std::out_of_range);
}

TEST(Gep, Examples) {
  auto g = gep(ParamSpec::standard(2));
  EXPECT_EQ(g.coeffs_z, ints({0, 1, 1}));
  ASSERT_TRUE(g.coeffs_zm1.has_value());
  // P(z) = z + 1 = (z-1) + 2, and k! S(2,k) = [0, 1, 2].
  EXPECT_EQ(*g.coeffs_zm1, ints({0, 1, 2}));
  auto one = gep(ParamSpec::standard(0));
  EXPECT_EQ(one.coeffs_z, ints({1}));
  EXPECT_EQ(*one.coeffs_zm1, ints({1}));

  ParamSpec gsnt2(1, 1, 1, 1, {{1, 0, 1, 2}});
  auto g2 = gep(gsnt2);
  // Shift the ascending-power form by hand and compare with k! S / scale.
  std::vector<Scalar> ascending(g2.coeffs_z.rbegin(), g2.coeffs_z.rend());
  auto shifted = rebase_z_to_zm1(std::span<const Scalar>(ascending));
  std::vector<Scalar> by_k(shifted.rbegin(), shifted.rend());
  EXPECT_EQ(by_k, gep_zm1_from_gsn(gsnt2));
  EXPECT_EQ(*g2.coeffs_zm1, by_k);
}

TEST(Boundary, Examples) {
  auto bv = boundary_values(kGsnt3);
  EXPECT_EQ(bv.first, Scalar(4));
  EXPECT_EQ(bv.last, Scalar(1));
  EXPECT_EQ(boundary_values(ParamSpec(3, 0, 2, 2)).first, Scalar(0));
  auto sym = boundary_values(ParamSpec(X("a1"), X("b1"), 1, 2));
  EXPECT_EQ(sym.first, X("b1") * X("b1"));
  EXPECT_EQ(sym.second, (X("a1") + X("b1")).pow(2) - X("b1").pow(2));
  EXPECT_EQ(sym.last, X("a1").pow(2));
}

// --- grid properties -----------------------------------------------------------

class GsnGrid : public ::testing::Test {
 protected:
  static const std::vector<ParamSpec>& points() {
    static const auto g = grid::general();
    return g;
  }
};

TEST_F(GsnGrid, Size) {
  EXPECT_GE(points().size(), 500u);
  for (const auto& ps : points()) {
    EXPECT_LE(ps.r(), 3u);
    EXPECT_LE(ps.p(), 3u);
    EXPECT_LE(ps.factors().size(), 2u);
  }
}

TEST_F(GsnGrid, ExplicitRowsMatchInterpolation) {
  for (const auto& ps : points()) {
    auto o = testing_support::to_oracle(ps);
    ASSERT_EQ(gsn_row(ps), testing_support::from_mpq(oracle::gsn_row(o))) << ps.describe();
    ASSERT_EQ(gen_row(ps), testing_support::from_mpq(oracle::gen_row(o))) << ps.describe();
  }
}

TEST_F(GsnGrid, ConversionsAgreeWithExplicit) {
  for (const auto& ps : points()) {
    for (long k = 0; k <= static_cast<long>(ps.degree()); ++k) {
      ASSERT_EQ(gsn_from_gen(ps, k), gsn_explicit(ps, k)) << ps.describe() << " k=" << k;
      ASSERT_EQ(gen_from_gsn(ps, k), gen_explicit(ps, k)) << ps.describe() << " i=" << k;
    }
  }
}

TEST_F(GsnGrid, ConversionsAreInverseMaps) {
  for (const auto& ps : points()) {
    std::vector<Scalar> probe;
    for (unsigned i = 0; i <= ps.degree(); ++i) probe.emplace_back(Rational(static_cast<long>(3 * i * i) - 5, static_cast<long>(i + 1)));
    ASSERT_EQ(convert_gsn_to_gen(ps, convert_gen_to_gsn(ps, probe)), probe) << ps.describe();
    ASSERT_EQ(convert_gen_to_gsn(ps, convert_gsn_to_gen(ps, probe)), probe) << ps.describe();
    auto gen = gen_row(ps);
    ASSERT_EQ(convert_gen_to_gsn(ps, gen), gsn_row(ps)) << ps.describe();
  }
}

TEST_F(GsnGrid, DefiningExpansions) {
  for (const auto& ps : points()) {
    ASSERT_TRUE(verify_gen_expansion(ps)) << ps.describe();
    ASSERT_TRUE(verify_gsn_expansion(ps)) << ps.describe();
    auto o = testing_support::to_oracle(ps);
    auto s = gsn_row(ps);
    long d = ps.degree();
    for (long n = 0; n <= d; ++n) {
      Scalar sum = 0;
      for (long k = 0; k <= d; ++k) sum += factorial(k) * s[k] * binom_int(n, k);
      ASSERT_EQ(sum / Scalar(ps.scale()), Scalar(Rational(o.value(n)))) << ps.describe() << " n=" << n;
    }
  }
}

TEST_F(GsnGrid, GepBasesConsistent) {
  for (const auto& ps : points()) {
    auto g = gep(ps);
    ASSERT_EQ(g.coeffs_z.size(), ps.degree() + 1);
    ASSERT_TRUE(g.coeffs_zm1.has_value());
    ASSERT_EQ(*g.coeffs_zm1, gep_zm1_from_gsn(ps)) << ps.describe();
  }
}

TEST_F(GsnGrid, BoundaryValues) {
  for (const auto& ps : points()) {
    auto bv = boundary_values(ps);
    long d = ps.degree();
    ASSERT_EQ(bv.first, gsn_explicit(ps, 0)) << ps.describe();
    ASSERT_EQ(bv.last, gsn_explicit(ps, d)) << ps.describe();
    if (d >= 1) {
      ASSERT_EQ(bv.second, gsn_explicit(ps, 1)) << ps.describe();
    }
  }
}

TEST_F(GsnGrid, SeededExtensionIsDeterministic) {
  auto a = grid::general(42, 10);
  auto b = grid::general(42, 10);
  EXPECT_EQ(a.size(), points().size() + 10);
  EXPECT_EQ(a, b);
}

TEST(GsnSymbolic, ConversionMatchesExplicit) {
  ParamSpec ps(X("a"), X("b"), 1, 2, {{X("a2"), X("b2"), 1, 1}});
  for (long k = 0; k <= 3; ++k) {
    Scalar diff = gsn_from_gen(ps, k) - gsn_explicit(ps, k);
    EXPECT_TRUE(diff.is_zero()) << k << ": " << diff;
    EXPECT_TRUE(diff.poly() == nullptr || diff.poly()->terms().empty());
  }
  EXPECT_TRUE(verify_gsn_expansion(ps));
  EXPECT_TRUE(verify_gen_expansion(ps));
}

TEST(GsnTable, Routes) {
  ParamSpec fam(1, 0, 2, 0, {{1, 1, 1, 2}});
  auto e = gsn_table(fam, 3);
  auto c = gsn_table(fam, 3, Route::Conversion);
  ASSERT_EQ(e.row_count(), 4u);
  EXPECT_EQ(e.rows, c.rows);
  for (unsigned p = 0; p <= 3; ++p) EXPECT_EQ(e.rows[p].size(), 2 * p + 3);
  EXPECT_EQ(gen_table(fam, 2).rows[2], gen_row(fam.with_p(2)));
  EXPECT_THROW(gsn_table(fam, 2, Route::Recurrence), std::invalid_argument);
}
