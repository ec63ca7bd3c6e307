#include <gtest/gtest.h>

#include <vector>

#include "motzkin/counting.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/series.hpp"
#include "oracles.hpp"

namespace {

using namespace motzkin;

std::vector<long long> small(const IntSeries& s, int upto) {
  std::vector<long long> out;
  for (int n = 0; n <= upto; ++n) out.push_back(static_cast<long long>(s[n]));
  return out;
}

TEST(IntSeries, ConstructionAndAccess) {
  const IntSeries a({1, 2, 3, 4}, 2);
  EXPECT_EQ(a.order(), 2);
  EXPECT_EQ(small(a, 2), (std::vector<long long>{1, 2, 3}));
  EXPECT_THROW(a[3], std::out_of_range);
  EXPECT_TRUE(IntSeries(5).is_zero());
  EXPECT_THROW(IntSeries(-1), DomainError);
  EXPECT_EQ(IntSeries({1, -1}, 3).to_string(), "1 - z + O(z^4)");
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(IntSeries({1, 1}, 4) * IntSeries({1, -1}, 4), IntSeries({1, 0, -1}, 4));
  EXPECT_EQ(power(IntSeries({1, 1, 1}, 6), 2), IntSeries({1, 2, 3, 2, 1}, 6));
  EXPECT_EQ(power(IntSeries({7, 3}, 5), 0), IntSeries::one(5));
  EXPECT_EQ((IntSeries({1, 2}, 3) + IntSeries({0, 1, 1}, 2)).order(), 2);
  EXPECT_EQ(shift(IntSeries({1, 1}, 2), 2), IntSeries({0, 0, 1, 1}, 4));
}

TEST(Arithmetic, MultiplicationMatchesSchoolbook) {
  const std::vector<long long> a{3, -1, 4, 1, -5, 9, 2, -6};
  const std::vector<long long> b{2, 7, -1, 8, 2, -8, 1, 8};
  for (int order = 0; order <= 7; ++order) {
    const auto want = oracle::poly_mul(a, b, order);
    const auto got = IntSeries({3, -1, 4, 1, -5, 9, 2, -6}, order) * IntSeries({2, 7, -1, 8, 2, -8, 1, 8}, order);
    EXPECT_EQ(small(got, order), want) << order;
  }
}

TEST(Arithmetic, PowerMatchesRepeatedProduct) {
  const IntSeries g = grand_series(25);
  IntSeries acc = IntSeries::one(25);
  for (int j = 0; j <= 9; ++j) {
    EXPECT_EQ(power(g, j), acc) << j;
    acc = mul_serial(acc, g);
  }
}

TEST(Arithmetic, CommutativeAndAssociative) {
  const IntSeries a = motzkin_series(30);
  const IntSeries b = grand_series(30);
  const IntSeries c = subst_v(30);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
}

TEST(InvertUnit, Examples) {
  EXPECT_EQ(invert_unit(IntSeries({1, -1}, 6)), IntSeries({1, 1, 1, 1, 1, 1, 1}, 6));
  const IntSeries inv = invert_unit(IntSeries({1, 1, 1}, 9));
  EXPECT_EQ(small(inv, 9), (std::vector<long long>{1, -1, 0, 1, -1, 0, 1, -1, 0, 1}));
  EXPECT_EQ(inv * IntSeries({1, 1, 1}, 9), IntSeries::one(9));
  EXPECT_EQ(invert_unit(IntSeries({-1, 2}, 4)) * IntSeries({-1, 2}, 4), IntSeries::one(4));
  EXPECT_THROW(invert_unit(IntSeries({2, 1}, 3)), DomainError);
  EXPECT_THROW(invert_unit(IntSeries({0, 1}, 3)), DomainError);
}

TEST(Compose, Examples) {
  const IntSeries f = grand_series(12);
  EXPECT_EQ(compose(f, IntSeries::variable(12)), f);
  const IntSeries geometric = invert_unit(IntSeries({1, -1}, 10));
  EXPECT_EQ(compose(geometric, IntSeries({0, 0, 1}, 10)), IntSeries({1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}, 10));
  EXPECT_THROW(compose(f, IntSeries({1, 1}, 12)), DomainError);
  EXPECT_EQ(compose(f, IntSeries::variable(5)).order(), 5);
}

TEST(MotzkinSeries, CoefficientsAndEquation) {
  const IntSeries m = motzkin_series(12);
  EXPECT_EQ(small(m, 4), (std::vector<long long>{1, 1, 2, 4, 9}));
  EXPECT_EQ(m[10], 2188);
  EXPECT_EQ(m[12], 15511);
  const IntSeries z = IntSeries::variable(12);
  EXPECT_TRUE((IntSeries::one(12) + z * m + z * z * m * m - m).is_zero());
  EXPECT_EQ(motzkin_series(0), IntSeries::one(0));
}

TEST(QSeries, ShiftOfMotzkin) {
  const IntSeries q = q_series(30);
  EXPECT_EQ(q[0], 0);
  EXPECT_EQ(small(q, 4), (std::vector<long long>{0, 1, 1, 2, 4}));
  const IntSeries z = IntSeries::variable(30);
  EXPECT_TRUE((z + z * q + z * q * q - q).is_zero());
  EXPECT_EQ(q, truncate(shift(motzkin_series(30), 1), 30));
  EXPECT_TRUE(q_series(0).is_zero());
}

TEST(GrandSeries, CoefficientsAndIdentities) {
  const int N = 30;
  const IntSeries g = grand_series(N);
  EXPECT_EQ(small(g, 4), (std::vector<long long>{1, 1, 3, 7, 19}));
  EXPECT_EQ(IntSeries({1, -2, -3}, N) * g * g, IntSeries::one(N));
  for (int n = 0; n <= N; ++n) EXPECT_EQ(g[n], oracle::trinomial(n, n)) << n;

  // G = sum_k z^{2k} M^{2k+1}, checked up to order 2K+1 for each K.
  const IntSeries m = motzkin_series(N);
  IntSeries partial(N);
  for (int k = 0; 2 * k + 1 <= N; ++k) {
    partial = partial + truncate(shift(power(m, 2 * k + 1), 2 * k), N);
    const int upto = 2 * k + 1;
    EXPECT_EQ(truncate(partial, upto), truncate(g, upto)) << k;
  }
}

TEST(SubstV, CoefficientsAndIdentities) {
  const int N = 30;
  const IntSeries v = subst_v(N);
  EXPECT_EQ(small(v, 4), (std::vector<long long>{0, 1, -1, 0, 1}));
  EXPECT_EQ(v * IntSeries({1, 1, 1}, N), IntSeries::variable(N));
  EXPECT_EQ(compose(q_series(N), v), IntSeries::variable(N));
  EXPECT_EQ(compose(grand_series(N), v) * IntSeries({1, 0, -1}, N), IntSeries({1, 1, 1}, N));
}

TEST(ForestCoefficients, QPowersMatchBruteForceForests) {
  const IntSeries q = q_series(12);
  for (int j = 1; j <= 12; ++j) {
    const IntSeries qj = power(q, j);
    for (int n = 1; n <= 12; ++n) ASSERT_EQ(qj[n], oracle::forests(n, j)) << n << "," << j;
  }
}

TEST(ForestCoefficients, TrinomialDifferenceUpToTwenty) {
  const IntSeries q = q_series(20);
  IntSeries qj = IntSeries::one(20);
  for (int j = 1; j <= 20; ++j) {
    qj = qj * q;
    for (int n = j; n <= 20; ++n) {
      ASSERT_EQ(qj[n], oracle::trinomial(n - 1, n - j) - oracle::trinomial(n - 1, n - j - 2)) << n << "," << j;
    }
  }
}

}  // namespace
