#include <gtest/gtest.h>

#include "gsn/bivariate.hpp"
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

std::vector<Scalar> rows_flat(const NumberTable& t, unsigned p) { return t.rows.at(p); }

Rational S(long p, long k) { return stirling2(p, k); }
Rational s(long p, long k) { return stirling1_unsigned(p, k); }

}  // namespace

TEST(Gsn2, Examples) {
  EXPECT_EQ(gsn2_row(BivariateParams(1, 1, 1, 0, 1, 2)), ints({0, 2, 4, 1}));
  EXPECT_EQ(gsn2_row(BivariateParams(1, 2, 1, 1, 1, 1)), ints({2, 4, 1}));
  BivariateParams sym(Coefficients::symbolic(), 1, 0);
  EXPECT_EQ(gsn2(sym, 1), X("a1"));
  EXPECT_EQ(gsn2(sym, 0), X("b1"));
  EXPECT_EQ(gsn2(sym, 2), Scalar(0));
  EXPECT_EQ(gsn2(sym, -1), Scalar(0));
}

TEST(Gsn2, Recurrence) {
  Coefficients gsnt1{1, 1, 1, 0};
  auto rows = gsn2_recurrence_rows(gsnt1, 1, 2);
  EXPECT_EQ(rows[2], ints({0, 4, 5, 1}));
  Coefficients gsnt4{1, 2, 1, 1};
  std::vector<Scalar> row;
  for (long k = 0; k <= 4; ++k) row.push_back(gsn2_recurrence(BivariateParams(gsnt4, 2, 2), k));
  EXPECT_EQ(row, ints({4, 32, 38, 12, 1}));
  auto std_rows = gsn2_recurrence_rows(Coefficients::standard(), 0, 10);
  for (long p = 0; p <= 10; ++p)
    for (long k = 0; k <= p; ++k) EXPECT_EQ(std_rows[p][k], Scalar(S(p, k)));
  EXPECT_THROW(gsn2_recurrence(BivariateParams(gsnt1, 0, 1), 0), std::invalid_argument);
}

TEST(Triangle, GoldenTables) {
  auto t1 = triangle({1, 1, 1, 0}, 1, 2);
  EXPECT_EQ(t1.rows, (std::vector<std::vector<Scalar>>{ints({0, 1}), ints({0, 2, 1}), ints({0, 4, 5, 1})}));
  auto t2 = triangle({1, 1, 1, 0}, 2, 2);
  EXPECT_EQ(t2.rows, (std::vector<std::vector<Scalar>>{ints({0, 1, 1}), ints({0, 2, 4, 1}), ints({0, 4, 14, 8, 1})}));
  auto t3 = triangle({1, 2, 1, 1}, 1, 2);
  EXPECT_EQ(t3.rows, (std::vector<std::vector<Scalar>>{ints({1, 1}), ints({2, 4, 1}), ints({4, 14, 8, 1})}));
  auto t4 = triangle({1, 2, 1, 1}, 2, 2);
  EXPECT_EQ(t4.rows, (std::vector<std::vector<Scalar>>{ints({1, 3, 1}), ints({2, 10, 7, 1}), ints({4, 32, 38, 12, 1})}));
  EXPECT_EQ(rows_flat(t4, 0).size(), 3u);
}

TEST(TransformParams, Examples) {
  BivariateParams bp(Q("1/2"), 3, -2, Q("-1/2"), 3, 2);
  for (long k = 0; k <= 5; ++k) {
    // Standard target: sum of binomials times classical Stirling numbers.
    Scalar standard = 0;
    for (unsigned j1 = 0; j1 <= 3; ++j1)
      for (unsigned j2 = 0; j2 <= 2; ++j2)
        standard += binom_int(3, j1) * binom_int(2, j2) * power_scalar(bp.a1, j1) * power_scalar(bp.a2, j2) *
                    power_scalar(bp.b1, 3 - j1) * power_scalar(bp.b2, 2 - j2) * S(j1 + j2, k);
    EXPECT_EQ(transform_params(bp, Target::standard(), k), standard) << k;
    EXPECT_EQ(standard, gsn2(bp, k));
  }
  Target same{bp.a1, bp.b1, bp.a2, bp.b2};
  for (long k = 0; k <= 5; ++k) EXPECT_EQ(transform_params(bp, same, k), gsn2(bp, k));
  BivariateParams std5(Coefficients::standard(), 5, 0);
  Target cd{Q("3/2"), -2, 1, 0};
  for (long k = 0; k <= 5; ++k) EXPECT_EQ(transform_params(std5, cd, k), Scalar(S(5, k)));
  EXPECT_THROW(transform_params(bp, Target{0, 1, 1, 0}, 1), std::domain_error);
  EXPECT_THROW(transform_params(bp, Target{1, 0, X("c2"), 0}, 1), std::domain_error);
}

TEST(ShiftB, Examples) {
  for (unsigned p = 0; p <= 6; ++p)
    for (long k = 0; k <= p; ++k)
      EXPECT_EQ(shift_b(BivariateParams(1, 0, 1, 0, p, 0), k), Scalar(S(p + 1, k + 1)));
  std::vector<Scalar> row;
  for (long k = 0; k <= 2; ++k) row.push_back(shift_b(BivariateParams(1, 1, 1, 0, 1, 1), k));
  EXPECT_EQ(row, ints({2, 4, 1}));
  BivariateParams sym(X("a1"), X("b1"), 1, 0, 1, 0);
  EXPECT_EQ(shift_b(sym, 0), X("a1") + X("b1"));
  EXPECT_EQ(shift_b(sym, 0), gsn2(BivariateParams(X("a1"), X("a1") + X("b1"), 1, 1, 1, 0), 0));
}

TEST(MShift, Examples) {
  for (const auto& c : grid::bivariate(6))
    for (unsigned p1 = 0; p1 <= 3; ++p1)
      for (unsigned p2 = 0; p2 <= 2; ++p2) {
        BivariateParams bp(c, p1, p2);
        for (long k = 0; k <= bp.degree(); ++k) {
          Scalar base = gsn2(bp, k);
          for (unsigned m = 0; m <= 3; ++m) ASSERT_EQ(m_shift_representation(bp, m, k), base) << bp.describe() << " m=" << m;
          ASSERT_EQ(shifted_expansion_standard(bp, 2, k), factorial(k) * base);
          ASSERT_EQ(shifted_expansion_factorial(bp, Target{2, -1, Q("1/2"), 3}, 2, k), factorial(k) * base);
        }
      }
  for (long p = 0; p <= 8; ++p)
    for (long k = 0; k <= p; ++k) {
      Rational printed = S(p + 3, k + 3) - Rational(3) * S(p + 2, k + 3) + Rational(2) * S(p + 1, k + 3);
      EXPECT_EQ(s1m_representation(3, p, k), printed);
      EXPECT_EQ(Scalar(printed), gsn1(1, 3, p, k));
    }
  EXPECT_THROW(s1m_representation(0, 2, 1), std::invalid_argument);
  for (unsigned p = 0; p <= 6; ++p)
    for (long k = 0; k <= 6 + p; ++k) {
      BivariateParams bp(1, 1, 1, 0, 6 - (p % 3), p);
      EXPECT_EQ(m_shift_representation(bp, 1, k), m_shift_representation(bp, 0, k));
    }
}

TEST(FirstKindShift, Examples) {
  for (unsigned j = 0; j <= 6; ++j)
    for (unsigned k = 0; k <= j; ++k) {
      auto [l, r] = lemma3_lhs_rhs(j, k, 1);
      EXPECT_EQ(l, r);
      EXPECT_EQ(l, factorial(k) * S(j + 1, k + 1));
    }
  for (unsigned j = 0; j <= 6; ++j) {
    auto [l, r] = lemma3_lhs_rhs(j, j, 2);
    EXPECT_EQ(l, r);
  }
  // Direct evaluation for (j, k, m) = (4, 2, 3).
  Rational lhs = 0, rhs = 0;
  for (long t = 0; t <= 3; ++t) lhs += binom_int(3, t) * factorial(2 + t) * S(4, 2 + t);
  for (long t = 0; t < 3; ++t) {
    Rational term = s(3, 3 - t) * S(4 + 3 - t, 5);
    rhs += (t % 2 == 0) ? term : -term;
  }
  rhs *= factorial(2);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lemma3_lhs_rhs(4, 2, 3), std::make_pair(lhs, rhs));
  EXPECT_THROW(lemma3_lhs_rhs(2, 3, 1), std::invalid_argument);
}

TEST(StirlingFamily, Examples) {
  for (unsigned p1 = 0; p1 <= 6; ++p1)
    for (long l = 0; l <= p1 + 2; ++l) {
      Rational display = S(p1 + 1, l);
      for (unsigned j = 0; j <= p1; ++j) display += binom_int(p1, j) * Rational(2).pow(p1 - j) * S(j, l - 2);
      EXPECT_EQ(stirling_recurrence_family(p1, 2, l), display);
      EXPECT_EQ(display, S(p1 + 2, l));
    }
  for (unsigned p2 = 1; p2 <= 8; ++p2) {
    EXPECT_EQ(stirling_recurrence_family(1, p2, p2), S(p2 + 1, p2));
    EXPECT_EQ(S(p2 + 1, p2), s(p2, p2 - 1) + Rational(p2));
    Rational second = s(p2, p2 - 1) * s(p2, p2 - 1) + Rational(p2) * s(p2, p2 - 1) - s(p2, p2 - 2) + Rational(p2 * p2);
    EXPECT_EQ(S(p2 + 2, p2), second) << p2;
    EXPECT_EQ(stirling_recurrence_family(2, p2, p2), second);
  }
  for (long p = 0; p <= 8; ++p)
    for (long l = 0; l <= p + 3; ++l) {
      EXPECT_EQ(stirling_iterated(2, p, l), S(p + 2, l));
      EXPECT_EQ(stirling_iterated(3, p, l), S(p + 3, l));
    }
  EXPECT_THROW(stirling_recurrence_family(2, 0, 1), std::invalid_argument);
}

TEST(Convolution, Examples) {
  for (const auto& c : grid::bivariate(4))
    for (unsigned p1 = 0; p1 <= 2; ++p1)
      for (unsigned p2 = 0; p2 <= 2; ++p2)
        for (unsigned q1 = 0; q1 <= 2; ++q1)
          for (unsigned q2 = 0; q2 <= 2; ++q2)
            for (long l = 0; l <= p1 + p2 + q1 + q2; ++l) {
              Scalar direct = gsn2(BivariateParams(c, p1 + p2, q1 + q2), l);
              ASSERT_EQ(convolution_q(c, p1, p2, q1, q2, l), direct);
              ASSERT_EQ(lemma4_rhs(c, p2, q1, q2, l), gsn2(BivariateParams(c, p2, q1 + q2), l));
            }
  // q1 = q2 = 0 in the standard case: a binomial double sum of classical numbers.
  for (unsigned p1 = 0; p1 <= 5; ++p1)
    for (unsigned p2 = 0; p2 <= 5; ++p2)
      for (long l = 0; l <= p1 + p2; ++l) {
        Rational sum = 0;
        for (long m = 0; m <= p2; ++m)
          for (unsigned j = 0; j <= p1; ++j) sum += binom_int(p1, j) * Rational(m).pow(p1 - j) * S(p2, m) * S(j, l - m);
        EXPECT_EQ(convolution_q(Coefficients::standard(), p1, p2, 0, 0, l), Scalar(sum));
        EXPECT_EQ(sum, S(p1 + p2, l));
      }
  TripleIndices idx{1, 2, 1, 1, 0, 1};
  for (long l = 0; l <= 6; ++l)
    EXPECT_EQ(convolution_triple({2, -1, Q("1/2"), 1}, idx, l), gsn2(BivariateParams(2, -1, Q("1/2"), 1, 4, 2), l));
}

TEST(ClassicalConvolution, Examples) {
  for (unsigned p1 = 0; p1 <= 3; ++p1)
    for (unsigned p2 = 0; p2 <= 3; ++p2)
      for (long l = 0; l <= p1 + p2; ++l) {
        auto [lhs, rhs] = corollary3_identity(p1, p2, 0, 0, l, 0);
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(lhs, S(p1 + p2, l));
      }
  for (unsigned p = 0; p <= 6; ++p)
    for (long k = 0; k <= p + 2; ++k) {
      auto [lhs, rhs] = claim_plus_one(1, 1, 2, p, k);
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(rhs, gsn1(1, 1, p, k) + Scalar(2) * gsn1(1, 1, p + 1, k) + gsn1(1, 1, p + 2, k));
    }
  auto [l, r] = binomial_identity(2, 2, 2, 2);
  EXPECT_EQ(l, r);
  EXPECT_FALSE(l.is_zero());
}

TEST(PowerSum, Examples) {
  for (unsigned m = 1; m <= 12; ++m)
    for (long k = 0; k < m; ++k) {
      auto [l1, r1] = power_sum_example_1(m, k);
      EXPECT_EQ(l1, r1) << m << "," << k;
      auto [l2, r2] = power_sum_example_2(m, k);
      EXPECT_EQ(l2, r2) << m << "," << k;
    }
  for (const auto& c : grid::bivariate(6))
    for (unsigned p1 = 0; p1 <= 2; ++p1)
      for (unsigned p2 = 0; p2 <= 2; ++p2) {
        BivariateParams bp(c, p1, p2);
        auto [lhs, rhs] = power_sum(bp, 1, 0);
        ASSERT_EQ(lhs, rhs);
        ASSERT_EQ(lhs, power_scalar(c.b1 + c.a1, p1) * power_scalar(c.b2 + c.a2, p2));
        for (unsigned m = 2; m <= 5; ++m)
          for (long k = 0; k < m; ++k) {
            auto [a, b] = power_sum(bp, m, k);
            ASSERT_EQ(a, b) << bp.describe() << " m=" << m << " k=" << k;
          }
      }
  EXPECT_THROW(power_sum(BivariateParams(), 3, 3), std::out_of_range);
  EXPECT_THROW(power_sum(BivariateParams(), 0, 0), std::out_of_range);
}

TEST(Vandermonde, Examples) {
  BivariateParams bp(Q("3/2"), -1, 2, Q("1/2"), 3, 1);
  for (unsigned k = 0; k <= 4; ++k) {
    auto [l, r] = vandermonde_convolution(bp, k, 0);
    EXPECT_EQ(l, r);
    EXPECT_EQ(l, gsn2(bp, k));
  }
  auto [l, r] = vandermonde_convolution(BivariateParams(Coefficients::standard(), 5, 0), 2, 2);
  EXPECT_EQ(l, r);
  EXPECT_EQ(l, Scalar(binom_int(4, 2) * S(5, 4)));
  auto [sl, sr] = vandermonde_convolution(BivariateParams(Coefficients::symbolic(), 2, 1), 1, 1);
  EXPECT_TRUE((sl - sr).is_zero());
  EXPECT_TRUE(sl.is_symbolic());
}

// --- properties over the coefficient grid ------------------------------------

TEST(BivariateGrid, SymmetryMergeAndRoutes) {
  for (const auto& c : grid::bivariate(24))
    for (unsigned p1 = 0; p1 <= 3; ++p1)
      for (unsigned p2 = 0; p2 <= 3; ++p2) {
        BivariateParams bp(c, p1, p2);
        BivariateParams swapped(c.a2, c.b2, c.a1, c.b1, p2, p1);
        auto row = gsn2_row(bp);
        ASSERT_EQ(row, gsn2_row(swapped)) << bp.describe();
        ASSERT_EQ(row, gsn_row(bp.to_param_spec())) << bp.describe();
        ASSERT_EQ(row, testing_support::from_mpq(oracle::gsn2_row(testing_support::to_mpq(c.a1), testing_support::to_mpq(c.b1),
                                                                   testing_support::to_mpq(c.a2), testing_support::to_mpq(c.b2), p1, p2)))
            << bp.describe();
        auto rec = gsn2_recurrence_rows(c, p2, p1);
        ASSERT_EQ(rec[p1], row) << bp.describe();
        for (long k = 0; k <= bp.degree(); ++k)
          ASSERT_EQ(gsn2(BivariateParams(c.a1, c.b1, c.a1, c.b1, p1, p2), k), gsn1(c.a1, c.b1, p1 + p2, k));
      }
}

TEST(BivariateGrid, Shifts) {
  for (long p = 0; p <= 12; ++p)
    for (long k = 0; k <= p; ++k) {
      EXPECT_EQ(gsn1(1, 1, p, k), Scalar(S(p + 1, k + 1)));
      EXPECT_EQ(gsn1(1, 2, p, k), Scalar(S(p + 2, k + 2) - S(p + 1, k + 2)));
    }
  for (unsigned p = 0; p <= 8; ++p)
    for (long k = -1; k <= p + 2; ++k)
      EXPECT_EQ(gsn2(BivariateParams(1, 2, 1, 1, p, 1), k), gsn2(BivariateParams(1, 1, 1, 0, p, 2), k + 1));
}

TEST(BivariateSymbolic, ZeroDifferences) {
  auto c = Coefficients::symbolic();
  Target t{X("c1").pow(0) * Scalar(2), X("d1"), Scalar(Q("-1/3")), X("d2")};
  for (unsigned p1 = 0; p1 <= 2; ++p1)
    for (unsigned p2 = 0; p2 <= 2; ++p2) {
      BivariateParams bp(c, p1, p2);
      for (long k = 0; k <= bp.degree(); ++k) {
        Scalar direct = gsn2(bp, k);
        ASSERT_TRUE((transform_params(bp, t, k) - direct).is_zero());
        BivariateParams shifted(c.a1, c.a1 + c.b1, c.a2, c.a2 + c.b2, p1, p2);
        ASSERT_TRUE((shift_b(bp, k) - gsn2(shifted, k)).is_zero());
      }
    }
}
