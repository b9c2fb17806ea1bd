#include <gtest/gtest.h>

#include "btlab/bigint.hpp"
#include "btlab/error.hpp"
#include "btlab/hermite.hpp"
#include "btlab/matrix.hpp"
#include "btlab/params.hpp"
#include "oracles.hpp"

using namespace btlab;

TEST(BigInt, PowersAndValuations) {
  EXPECT_EQ(ipow(2, 130), BigInt(1) << 130);
  EXPECT_EQ(valuation(BigInt(48), 2), 4U);
  EXPECT_EQ(valuation(BigInt(-81), 3), 4U);
  EXPECT_EQ(p_power_exponent(BigInt(-125), 5), 3U);
  EXPECT_EQ(p_power_exponent(BigInt(1), 7), 0U);
  EXPECT_FALSE(p_power_exponent(BigInt(12), 2).has_value());
  EXPECT_FALSE(p_power_exponent(BigInt(0), 2).has_value());
}

TEST(BigInt, FloorDivisionRoundsDown) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_div(-8, 2), -4);
}

TEST(BigInt, ParseRoundTrip) {
  const BigInt big = ipow(3, 200) * -1;
  EXPECT_EQ(parse_bigint(to_string(big)), big);
  EXPECT_EQ(parse_bigint("+17"), 17);
  EXPECT_THROW(parse_bigint(""), Error);
  EXPECT_THROW(parse_bigint("12a"), Error);
  EXPECT_THROW(parse_bigint("-"), Error);
}

TEST(Params, PrimalityMatchesTrialDivision) {
  for (std::uint64_t v = 0; v < 5000; ++v) EXPECT_EQ(is_prime(v), oracle::is_prime_trial(v)) << v;
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));
}

TEST(Params, RejectsCompositeAndSmallDimension) {
  EXPECT_NO_THROW(BuildingParams::make(2, 2));
  try {
    BuildingParams::make(4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
  EXPECT_THROW(BuildingParams::make(2, 1), Error);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  const IntMatrix m{{2, -1, 3, 0}, {4, 5, -2, 1}, {0, 3, 7, -6}, {1, 1, 1, 9}};
  EXPECT_EQ(determinant(m), oracle::det(m));
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Hermite, LowerTriangularReducedForm) {
  const IntMatrix gens{{4, 6, 2}, {2, 3, 7}, {0, 8, 5}};
  const IntMatrix h = column_hermite_form(gens);
  ASSERT_EQ(h.rows(), 3U);
  ASSERT_EQ(h.cols(), 3U);
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_GT(h(r, r), 0);
    for (std::size_t c = r + 1; c < 3; ++c) EXPECT_EQ(h(r, c), 0);
    for (std::size_t c = 0; c < r; ++c) {
      EXPECT_GE(h(r, c), 0);
      EXPECT_LT(h(r, c), h(r, r));
    }
  }
  EXPECT_TRUE(oracle::contains(h, gens));
  EXPECT_TRUE(oracle::contains(gens, h));
}

TEST(Hermite, RankDeficientThrows) {
  try {
    column_hermite_form(IntMatrix{{1, 2}, {2, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
  }
}
