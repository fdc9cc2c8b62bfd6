#include "fraccauchy/gamma.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"

namespace fraccauchy {
namespace {

TEST(Gamma, IntegerAndUnitValues) {
  EXPECT_EQ(gamma(5.0), 24.0);
  EXPECT_EQ(gamma(1.0), 1.0);
  EXPECT_EQ(fact(3.0), 6.0);
  EXPECT_EQ(fact(0.0), 1.0);
  EXPECT_EQ(recip_fact(0.0), 1.0);
}

TEST(Gamma, HalfMatchesQuadratureOracle) {
  const double oracle_value = oracle::gamma_half_by_quadrature();
  EXPECT_NEAR(oracle_value, 1.7724538509055160273, 1e-14);  // frozen from mpmath
  EXPECT_NEAR(gamma(0.5), oracle_value, 1e-14);
  EXPECT_NEAR(fact(-0.5), oracle_value, 1e-14);
  EXPECT_NEAR(recip_fact(1.5), 0.75225277806367504926, 1e-15);
}

TEST(Gamma, RelativeAccuracyOverPositiveRange) {
  double worst = 0.0;
  for (double x = 0.01; x <= 170.0; x += 0.0173) {
    const long double ref = std::tgamma(static_cast<long double>(x));
    worst = std::max(worst, static_cast<double>(std::fabs((gamma(x) - ref) / ref)));
  }
  EXPECT_LE(worst, 1e-13);
}

TEST(Gamma, NegativeNonIntegersUseReflection) {
  for (double x : {-0.5, -1.5, -2.25, -7.9, -12.1}) {
    const long double ref = std::tgamma(static_cast<long double>(x));
    EXPECT_NEAR(gamma(x) / static_cast<double>(ref), 1.0, 1e-13) << x;
  }
}

TEST(Gamma, PolesAndOverflowAreReported) {
  EXPECT_THROW(gamma(0.0), PoleError);
  EXPECT_THROW(gamma(-3.0), PoleError);
  EXPECT_THROW(gamma(171.7), OverflowError);
  EXPECT_THROW(gamma(200.0), OverflowError);
  EXPECT_NO_THROW(gamma(171.5));
}

TEST(Gamma, Recurrence) {
  for (double x = 0.1; x <= 50.0; x += 0.037) {
    const double lhs = gamma(x + 1.0);
    EXPECT_LE(std::fabs(lhs - x * gamma(x)), 1e-12 * std::fabs(lhs)) << x;
  }
}

TEST(Gamma, Reflection) {
  for (double x = 0.005; x < 1.0; x += 0.0049) {
    const double v = gamma(x) * gamma(1.0 - x) * std::sin(std::numbers::pi * x) / std::numbers::pi;
    EXPECT_NEAR(v, 1.0, 1e-11) << x;
  }
}

TEST(RecipFact, ExactZeroAtNegativeIntegers) {
  EXPECT_EQ(recip_fact(-1.0), 0.0);
  EXPECT_EQ(recip_fact(-2.0), 0.0);
  EXPECT_EQ(recip_fact(-7.0), 0.0);
  EXPECT_EQ(recip_gamma(0.0), 0.0);
}

TEST(RecipFact, ContinuousThroughMinusOne) {
  for (double side : {-1.0, 1.0}) {
    double previous = INFINITY;
    for (int k = 1; k <= 8; ++k) {
      const double v = std::fabs(recip_fact(-1.0 + side * std::pow(10.0, -k)));
      EXPECT_LT(v, previous) << "k=" << k;
      previous = v;
    }
    EXPECT_LT(previous, 1e-7);
  }
}

TEST(RecipFact, LargeArgumentsUnderflowQuietly) {
  EXPECT_GT(recip_gamma(171.0), 0.0);
  EXPECT_NEAR(recip_gamma(180.0) * 1e300, 1e300 / static_cast<double>(std::tgamma(180.0L)), 1e-200);
  EXPECT_EQ(recip_gamma(400.0), 0.0);
}

TEST(Gamma, LongDoubleInstantiation) {
  const long double v = gamma(0.5L);
  EXPECT_NEAR(static_cast<double>(v * v), std::numbers::pi, 1e-14);
  EXPECT_EQ(gamma(21.0L), 2432902008176640000.0L);
}

}  // namespace
}  // namespace fraccauchy
