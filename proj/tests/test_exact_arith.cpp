#include <gtest/gtest.h>

#include "oracles.hpp"
#include "setsys/errors.hpp"
#include "setsys/exact_arith.hpp"

using namespace setsys;

TEST(Binom, SmallValues) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(7, 0), 1);
  EXPECT_EQ(binom(4, 7), 0);
  EXPECT_EQ(binom(4, -1), 0);
}

TEST(Binom, AgreesWithPascalTriangle) {
  for (int n = 0; n <= 40; ++n)
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(binom(n, k), oracle::pascal(n, k)) << n << " " << k;
}

TEST(Binom, LargeIsExact) {
  EXPECT_EQ(binom(100, 50).str(), "100891344545564193334812497256");
  EXPECT_EQ(binom(200, 100), oracle::pascal(200, 100));
}

TEST(BinomSum, Examples) {
  EXPECT_EQ(binom_sum(5, 0, 2), 16);
  EXPECT_EQ(binom_sum(6, 1, 2), 21);
  EXPECT_EQ(binom_sum(3, -2, -1), 0);
}

TEST(BinomSum, RowSumIsPowerOfTwo) {
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(binom_sum(n, 0, n), ipow(2, n));
}

TEST(QBinom, Examples) {
  EXPECT_EQ(qbinom({2, 1, 2}), 3);
  EXPECT_EQ(qbinom({4, 2, 2}), 35);
  EXPECT_EQ(qbinom({3, 0, 3}), 1);
  EXPECT_EQ(qbinom({3, 4, 2}), 0);
}

TEST(QBinom, AgreesWithQPascal) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) EXPECT_EQ(qbinom({n, k, q}), oracle::q_pascal(n, k, q)) << q << " " << n << " " << k;
}

TEST(QBinom, Symmetric) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(qbinom({n, k, 3}), qbinom({n, n - k, 3}));
}

TEST(QBinom, RejectsNonPrimePower) {
  EXPECT_THROW(qbinom({3, 1, 6}), DomainError);
  EXPECT_THROW(qbinom({3, 1, 1}), DomainError);
}

TEST(QBinomSum, Examples) {
  EXPECT_EQ(qbinom_sum(2, 0, 1, 2), 4);
  EXPECT_EQ(qbinom_sum(4, 1, 2, 2), 50);
  EXPECT_EQ(qbinom_sum(3, -1, -1, 2), 0);
}

TEST(PrimePower, Classification) {
  const std::vector<std::uint64_t> yes = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 121};
  const std::vector<std::uint64_t> no = {0, 1, 6, 10, 12, 14, 15, 18, 20, 36, 100};
  for (auto q : yes) EXPECT_TRUE(is_prime_power(q)) << q;
  for (auto q : no) EXPECT_FALSE(is_prime_power(q)) << q;
}

TEST(Rational, FloorAndCompare) {
  EXPECT_EQ(floor_nonneg(ExactRational(7, 2)), 3);
  EXPECT_EQ(floor_nonneg(ExactRational(6, 2)), 3);
  EXPECT_LT(compare(ExactRational(7, 2), Natural(4)), 0);
  EXPECT_EQ(compare(ExactRational(8, 2), Natural(4)), 0);
  EXPECT_GT(compare(ExactRational(9, 2), Natural(4)), 0);
}
