#include <gtest/gtest.h>

#include <cmath>

#include "maplab/harmonic.hpp"

namespace maplab {
namespace {

TEST(Harmonic, SmallValues) {
  EXPECT_EQ(*harmonic(1).exact, Rational(1));
  EXPECT_EQ(*harmonic(2).exact, Rational(3, 2));
  EXPECT_EQ(*harmonic(4).exact, Rational(25, 12));
  EXPECT_DOUBLE_EQ(harmonic(4).value, 25.0 / 12.0);
  EXPECT_THROW(harmonic(0), std::invalid_argument);
  EXPECT_THROW(harmonic_exact(0), std::invalid_argument);
}

TEST(Harmonic, ExactUpToLimitThenFloat) {
  EXPECT_TRUE(harmonic(kExactHarmonicLimit).exact.has_value());
  EXPECT_FALSE(harmonic(kExactHarmonicLimit + 1).exact.has_value());
  EXPECT_TRUE(harmonic(100, 100).exact.has_value());
}

TEST(Harmonic, ConsecutiveDifferenceIsReciprocal) {
  for (std::size_t n = 2; n <= kExactHarmonicLimit; ++n)
    ASSERT_EQ(*harmonic(n).exact - *harmonic(n - 1).exact, Rational(1, static_cast<long long>(n))) << n;
}

TEST(Harmonic, FloatModeMatchesExactWithinTolerance) {
  // Exact rationals as the reference, just past the exact threshold.
  for (std::size_t n : {65u, 100u, 500u, 2000u}) {
    const double exact = to_double(harmonic_exact(n));
    EXPECT_LE(std::abs(harmonic(n).value - exact) / exact, 1e-12) << n;
  }
}

TEST(Harmonic, AsymptoticRegimeAgreesWithDirectSum) {
  // The two float regimes meet at 2^20; compare across the switch.
  const std::size_t n = (std::size_t{1} << 20) - 1;
  long double direct = 0.0L;
  for (std::size_t i = n + 1; i >= 1; --i) direct += 1.0L / static_cast<long double>(i);
  const double asymptotic = harmonic(n + 1).value;
  EXPECT_LE(std::abs(asymptotic - static_cast<double>(direct)) / static_cast<double>(direct), 1e-12);
}

}  // namespace
}  // namespace maplab
