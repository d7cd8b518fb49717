#include "bijlab/exactmath.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace bijlab {
namespace {

TEST(ExactIntTest, ArithmeticAndComparison) {
  ExactInt a{12};
  ExactInt b{30};
  EXPECT_EQ(a + b, ExactInt(42));
  EXPECT_EQ(b - a, ExactInt(18));
  EXPECT_EQ(a * b, ExactInt(360));
  EXPECT_LT(a, b);
  EXPECT_EQ(divide_exact(ExactInt(360), a), b);
  EXPECT_EQ(ExactInt::parse("340282366920938463463374607431768211456"),
            power(ExactInt(2), 128));
}

TEST(ExactIntTest, InexactDivisionIsAnError) {
  EXPECT_THROW(divide_exact(ExactInt(10), ExactInt(3)), arithmetic_error);
  EXPECT_THROW(divide_exact(ExactInt(10), ExactInt(0)), arithmetic_error);
}

TEST(ExactIntTest, NegativeValuesAreRejected) {
  EXPECT_THROW(ExactInt(3) - ExactInt(4), arithmetic_error);
  EXPECT_THROW(ExactInt(-1), domain_error);
  EXPECT_THROW(ExactInt::parse("-5"), domain_error);
  EXPECT_THROW(ExactInt::parse(""), domain_error);
}

TEST(ExactIntTest, U64Conversion) {
  EXPECT_EQ(ExactInt(std::uint64_t{18446744073709551615ULL}).to_u64(), 18446744073709551615ULL);
  EXPECT_THROW((void)power(ExactInt(2), 64).to_u64(), range_error);
}

// (a * b) / b == a and (a + b) - b == a for random multi-limb values.
TEST(ExactIntTest, RandomisedExactnessProperties) {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 500; ++trial) {
    ExactInt a = power(ExactInt(rng() | 1U), 1 + rng() % 6) + ExactInt(rng());
    ExactInt b = power(ExactInt(rng() | 1U), 1 + rng() % 6);
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_TRUE((a * b).divisible_by(a));
    EXPECT_EQ(ExactInt::parse((a * b).str()), a * b);
  }
}

TEST(BinomialTest, Examples) {
  // Frozen from the mask-enumeration oracle.
  EXPECT_EQ(testing::count_masks_with_popcount(5, 2), 10U);
  EXPECT_EQ(binomial(5, 2), ExactInt(10));
  for (std::int64_t n = 0; n <= 12; ++n) EXPECT_EQ(binomial(n, 0), ExactInt(1));
  EXPECT_EQ(binomial(4, 7), ExactInt(0));
  EXPECT_EQ(binomial(4, -1), ExactInt(0));
  EXPECT_THROW(binomial(-1, 0), domain_error);
}

TEST(BinomialTest, LargeValueIsExact) {
  EXPECT_EQ(binomial(100, 50), ExactInt::parse("100891344545564193334812497256"));
}

TEST(BinomialTest, PascalRecurrenceAndSymmetry) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1)) << n << "," << k;
    }
  }
  for (std::int64_t n = 0; n <= 30; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n, n - k));
  }
}

TEST(BinomialTest, MatchesAdditivePascalTriangle) {
  const auto rows = testing::pascal_triangle(60);
  for (unsigned n = 0; n <= 60; ++n) {
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), ExactInt(rows[n][k]));
  }
}

TEST(BinomialTest, RowSumIsPowerOfTwo) {
  for (std::int64_t n = 0; n <= 20; ++n) {
    ExactInt sum{0};
    for (std::int64_t k = 0; k <= n; ++k) sum += binomial(n, k);
    EXPECT_EQ(sum, power(ExactInt(2), static_cast<std::uint64_t>(n)));
  }
}

TEST(BinomialTest, AgreesWithWordEnumeration) {
  for (unsigned n = 0; n <= 14; ++n) {
    for (int k = 0; k <= static_cast<int>(n); ++k) {
      EXPECT_EQ(binomial(n, k), ExactInt(testing::count_masks_with_popcount(n, k)));
    }
  }
}

TEST(FactorialTest, Examples) {
  EXPECT_EQ(factorial(0), ExactInt(1));
  EXPECT_EQ(testing::count_permutations(4), 24U);
  EXPECT_EQ(factorial(4), ExactInt(24));
  EXPECT_EQ(testing::count_permutations(6), 720U);
  EXPECT_EQ(factorial(6), ExactInt(720));
  EXPECT_EQ(factorial(25), ExactInt::parse("15511210043330985984000000"));
  EXPECT_THROW(factorial(-2), domain_error);
}

TEST(PowerTest, Examples) {
  EXPECT_EQ(power(ExactInt(2), 10), ExactInt(1024));
  EXPECT_EQ(power(ExactInt(0), 0), ExactInt(1));
  EXPECT_EQ(power(ExactInt(7), 0), ExactInt(1));
  EXPECT_EQ(power(ExactInt(0), 3), ExactInt(0));
  EXPECT_EQ(testing::count_tuples(3, 4), 81U);
  EXPECT_EQ(power(ExactInt(3), 4), ExactInt(81));
}

TEST(PowerTest, MatchesRepeatedMultiplication) {
  for (std::uint64_t base = 0; base <= 12; ++base) {
    ExactInt expected{1};
    for (std::uint64_t e = 0; e <= 40; ++e) {
      EXPECT_EQ(power(ExactInt(base), e), expected);
      expected *= ExactInt(base);
    }
  }
}

// k^(k^n) for small k, n is the largest magnitude the sweeps reach.
TEST(PowerTest, DoubleExponentialMagnitude) {
  const ExactInt v = power(ExactInt(3), 243);  // 3^(3^5)
  EXPECT_EQ(v.str().size(), 116U);
  EXPECT_EQ(divide_exact(v, power(ExactInt(3), 242)), ExactInt(3));
}

}  // namespace
}  // namespace bijlab
