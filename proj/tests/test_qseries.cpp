#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "conifold_dt/flop.hpp"
#include "conifold_dt/oracles.hpp"
#include "conifold_dt/qseries.hpp"

using namespace conifold_dt;

namespace {

std::vector<BigInt> univariate(const QSeries& s) {
  std::vector<BigInt> out;
  for (int k = 0; k <= s.order(); ++k) {
    BigInt c = 0;
    for (const auto& [x, v] : s.coefficient(k)) {
      EXPECT_TRUE(x.is_unit());
      c += v;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

QSeries poly1(int order, std::initializer_list<long> coeffs) {
  QSeries s(order, 1);
  int k = 0;
  for (long c : coeffs) s.add_term(k++, LaurentMonomial(1), c);
  return s;
}

}  // namespace

TEST(MacMahon, PlanePartitionCounts) {
  const LaurentMonomial unit(0);
  EXPECT_EQ(univariate(macmahon_series(unit, 4)), ints({1, 1, 3, 6, 13}));
  EXPECT_EQ(univariate(oracle::macmahon_exp_form(unit, 4)), ints({1, 1, 3, 6, 13}));
  EXPECT_EQ(univariate(macmahon_series(unit, 8)), ints({1, 1, 3, 6, 13, 24, 48, 86, 160}));
}

TEST(MacMahon, SingleVariableToSecondOrder) {
  const auto x = LaurentMonomial::variable(1, 1);
  QSeries want = QSeries::one(2, 1);
  want.add_term(1, x, 1);
  want.add_term(2, x, 2);         // (1 - x q^2)^-2
  want.add_term(2, x.pow(2), 1);  // (1 - x q)^-1
  EXPECT_EQ(macmahon_series(x, 2), want);
}

TEST(MacMahon, OrderZeroIsOne) {
  EXPECT_EQ(macmahon_series(LaurentMonomial::variable(2, 2), 0), QSeries::one(0, 2));
}

TEST(MacMahon, ProductFormEqualsExpForm) {
  for (int K = 0; K <= 8; ++K) {
    for (std::size_t vars : {std::size_t{0}, std::size_t{1}, std::size_t{2}}) {
      std::vector<LaurentMonomial> args{LaurentMonomial(vars)};
      for (int k = 1; k <= static_cast<int>(vars); ++k) {
        args.push_back(LaurentMonomial::variable(vars, k));
        args.push_back(LaurentMonomial::variable(vars, k).inverse());
      }
      if (vars == 2) args.push_back(LaurentMonomial({1, -1}));
      for (const auto& x : args) EXPECT_EQ(macmahon_series(x, K), oracle::macmahon_exp_form(x, K));
    }
  }
}

TEST(SeriesMultiply, UnitAndDifferenceOfSquares) {
  const QSeries a = macmahon_series(LaurentMonomial::variable(2, 1), 5);
  EXPECT_EQ(series_multiply(a, QSeries::one(5, 2)), a);
  EXPECT_EQ(series_multiply(poly1(2, {1, 1}), poly1(2, {1, -1})), poly1(2, {1, 0, -1}));
}

TEST(SeriesMultiply, RejectsMismatchedSeries) {
  try {
    series_multiply(QSeries::one(3, 1), QSeries::one(4, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::order_mismatch);
  }
  EXPECT_THROW(series_multiply(QSeries::one(3, 1), QSeries::one(3, 2)), Error);
}

TEST(SeriesMultiply, CommutativeAndAssociative) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4), expo(-2, 2);
  auto random_series = [&] {
    QSeries s(5, 2);
    for (int k = 0; k <= 5; ++k)
      for (int r = 0; r < 4; ++r) {
        const int a = expo(rng), b = expo(rng);
        s.add_term(k, LaurentMonomial({a, b}), coef(rng));
      }
    return s;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const QSeries a = random_series(), b = random_series(), c = random_series();
    EXPECT_EQ(series_multiply(a, b), series_multiply(b, a));
    EXPECT_EQ(series_multiply(series_multiply(a, b), c), series_multiply(a, series_multiply(b, c)));
  }
}

TEST(SeriesPower, ZeroInverseAndSquare) {
  const QSeries m = macmahon_series(LaurentMonomial::variable(1, 1), 6);
  EXPECT_EQ(series_power(m, 0L), QSeries::one(6, 1));
  EXPECT_EQ(series_multiply(m, series_power(m, -1L)), QSeries::one(6, 1));
  EXPECT_EQ(series_power(series_power(m, -1L), -1L), m);
  EXPECT_EQ(univariate(series_power(macmahon_series(LaurentMonomial(0), 4), 2L)),
            ints({1, 2, 7, 18, 47}));
}

TEST(SeriesPower, MatchesRepeatedMultiplication) {
  const QSeries m = macmahon_series(LaurentMonomial({1, -1}), 5);
  QSeries acc = QSeries::one(5, 2);
  for (int e = 1; e <= 7; ++e) {
    acc = series_multiply(acc, m);
    EXPECT_EQ(series_power(m, static_cast<long>(e)), acc);
    EXPECT_EQ(series_multiply(series_power(m, static_cast<long>(-e)), acc), QSeries::one(5, 2));
  }
}

TEST(SeriesPower, NeedsUnitConstantTerm) {
  try {
    series_power(poly1(3, {2, 1}), -1L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_unit_constant_term);
  }
  EXPECT_THROW(series_power(QSeries(3, 1), 2L), Error);
}

TEST(Evaluate, SingleFactor) {
  const StripDiagram d(1, 1);
  ExponentMap e(d);
  e.add({1, 1}, -2);
  const auto x = LaurentMonomial::variable(1, 1);
  EXPECT_EQ(evaluate_exponent_map(e, 3), series_power(macmahon_series(x, 3), -2L));
  // Direct route: two copies of prod (1 - x q^k)^k.
  QSeries direct = QSeries::one(3, 1);
  for (int rep = 0; rep < 2; ++rep) direct = oracle::multiply_by_binomial_product(direct, x);
  EXPECT_EQ(evaluate_exponent_map(e, 3), direct);
}

TEST(Evaluate, TotalTwoThreeEqualsHomogeneousProduct) {
  const StripDiagram d(2, 3);
  const QSeries lhs = evaluate_exponent_map(total_partition(d), 4);
  EXPECT_EQ(lhs, oracle::homogeneous_product_series(d, -2, 4));
  EXPECT_EQ(lhs, oracle::per_triangulation_product_series(d, 4));
}

TEST(Evaluate, FlopTotalEqualsProductOfResolutionSeries) {
  const auto f = flop_total(3);
  QSeries per = QSeries::one(3, 3);
  for (const auto& c : flop_contributions(3)) per = series_multiply(per, evaluate_exponent_map(c, 3));
  EXPECT_EQ(evaluate_exponent_map(f, 3), per);
}

TEST(Evaluate, HalfIntegerM1IsRejectedButSquareWorks) {
  const auto f = flop_total(2);
  try {
    evaluate_exponent_map(f, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::half_integer_m1);
  }
  const QSeries squared = evaluate_exponent_map(f.scaled(2), 3);
  QSeries per = QSeries::one(3, 2);
  for (const auto& c : flop_contributions(2))
    per = series_multiply(per, evaluate_exponent_map(c.scaled(2), 3));
  EXPECT_EQ(squared, per);
}

TEST(Evaluate, M1PowerUsesUnitMacMahon) {
  ExponentMap e(StripDiagram(0, 2));
  e.set_m1_power(3);
  EXPECT_EQ(evaluate_exponent_map(e, 4),
            series_power(macmahon_series(LaurentMonomial(1), 4), 3L));
}

TEST(Print, LexicographicTerms) {
  const auto x = LaurentMonomial::variable(1, 1);
  EXPECT_EQ(to_string(macmahon_series(x, 2)),
            "1 * q^0 + 1 * Q1 * q^1 + 2 * Q1 * q^2 + 1 * Q1^2 * q^2 + O(q^3)");
  QSeries s(1, 2);
  s.add_term(1, LaurentMonomial({-1, 2}), -3);
  EXPECT_EQ(to_string(s), "-3 * Q1^-1*Q2^2 * q^1 + O(q^2)");
}
