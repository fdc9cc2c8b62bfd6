#include "fraccauchy/ml.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"

namespace fraccauchy {
namespace {

TEST(EvalE, ReducesToExponentialAtOrderOne) {
  const auto r = eval_E(1.0, 2.0);
  EXPECT_NEAR(r.value, std::exp(2.0), 1e-14);
  EXPECT_EQ(r.stop, StopRule::tail_tolerance);
  for (double z = -5.0; z <= 5.0; z += 0.25) {
    EXPECT_LE(std::fabs(eval_E(1.0, z).value / std::exp(z) - 1.0), 1e-12) << z;
  }
}

TEST(EvalE, ZeroArgumentIsOne) {
  for (double alpha : {0.1, 0.5, 1.0, 2.5}) {
    const auto r = eval_E(alpha, 0.0);
    EXPECT_EQ(r.value, 1.0);
    EXPECT_EQ(r.terms, 2);
  }
}

TEST(EvalE, OrderTwoIsHyperbolicCosine) {
  // E_2(x^2) = cosh x, checked against a 200-term brute-force sum.
  const double brute = static_cast<double>(oracle::ml_sum(2.0, 1.0, 4.0, 200));
  EXPECT_NEAR(brute, std::cosh(2.0), 1e-14);
  EXPECT_NEAR(eval_E(2.0, 4.0).value, brute, 1e-14);
  EXPECT_NEAR(eval_E(2.0, 4.0).value, 3.7621956910836314596, 1e-14);
}

TEST(EvalE2, Examples) {
  EXPECT_NEAR(eval_E2(1.0, 1.0, 1.0).value, std::exp(1.0), 1e-15);
  EXPECT_EQ(eval_E2(0.5, 2.0, 0.0).value, 1.0);
  const double brute = static_cast<double>(oracle::ml_sum(1.0, 2.0, 1.0, 60));
  EXPECT_NEAR(brute, std::exp(1.0) - 1.0, 1e-15);
  EXPECT_NEAR(eval_E2(1.0, 2.0, 1.0).value, brute, 1e-15);
}

TEST(EvalE2, PowerShiftedFormMatchesDirectSum) {
  for (double alpha : {0.5, 1.0 / 3.0}) {
    for (double beta : {1.0, 2.0}) {
      for (double x = 0.1; x <= 2.0; x += 0.1) {
        const double lhs = eval_E2(alpha, beta, std::pow(x, alpha)).value * std::pow(x, beta - 1.0);
        long double direct = 0.0L;
        for (int k = 0; k < 400; ++k) {
          const long double e = static_cast<long double>(alpha) * k + beta;
          direct += std::pow(static_cast<long double>(x), e - 1) * oracle::rgamma(e);
        }
        EXPECT_LE(std::fabs(lhs - static_cast<double>(direct)), 1e-12 * std::fabs(lhs))
            << alpha << ' ' << beta << ' ' << x;
      }
    }
  }
}

TEST(EvalE, Preconditions) {
  EXPECT_THROW(eval_E(0.0, 1.0), DomainError);
  EXPECT_THROW(eval_E2(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(eval_E(1.0, 1.0, SeriesControl{0, 1e-15, true}), DomainError);
  EXPECT_THROW(eval_E(1.0, 1.0, SeriesControl{10, 0.0, true}), DomainError);
}

TEST(EvalE, NonConvergenceWhenCapTooSmall) {
  EXPECT_THROW(eval_E(1.0, 5.0, SeriesControl{5, 1e-15, true}), NonConvergence);
  const auto r = eval_E(1.0, 5.0, SeriesControl{5, 1e-15, false});
  EXPECT_EQ(r.stop, StopRule::max_terms);
  EXPECT_EQ(r.terms, 5);
}

TEST(EvalE, MonotoneTruncationForPositiveArguments) {
  for (double alpha : {0.3, 0.7, 1.0}) {
    const double z = 2.0;
    const double oracle_value = static_cast<double>(oracle::ml_sum(alpha, 1.0, z, 300));
    double previous = INFINITY;
    for (int terms = 1; terms <= 80; ++terms) {
      const double v = eval_E(alpha, z, SeriesControl{terms, 1e-300, false}).value;
      const double err = std::fabs(v - oracle_value);
      EXPECT_LE(err, previous + 1e-15) << alpha << ' ' << terms;
      previous = err;
    }
  }
}

TEST(EvalHSeries, OrderOneIsExponential) {
  EXPECT_NEAR(eval_h_series({1.0, -1.0}, 2.0).value, 0.13533528323661269189, 1e-15);
  for (double lambda : {-2.5, -1.0, 0.5, 2.5}) {
    for (double x = 0.2; x <= 2.0; x += 0.2) {
      const double ref = std::exp(lambda * x);
      EXPECT_LE(std::fabs(eval_h_series({1.0, lambda}, x).value / ref - 1.0), 1e-12);
    }
  }
}

TEST(EvalHSeries, ZeroEigenvalueLeavesFirstTerm) {
  const auto r = eval_h_series({1.0 / 3.0, 0.0}, 1.0);
  EXPECT_NEAR(r.value, 0.37328217390739522833, 1e-15);  // 1/Gamma(1/3), mpmath
  EXPECT_EQ(r.terms, 2);
}

TEST(EvalHSeries, MatchesBruteForceSum) {
  const double brute = static_cast<double>(oracle::h_sum(1.0 / 3.0, 1.0, 0.5, 300));
  EXPECT_NEAR(brute, 5.4297458510692279932, 1e-13);  // frozen from mpmath at 50 digits
  EXPECT_NEAR(eval_h_series({1.0 / 3.0, 1.0}, 0.5).value, brute, 1e-13);
}

TEST(EvalHSeries, Preconditions) {
  EXPECT_THROW(eval_h_series({0.5, 1.0}, 0.0), DomainError);
  EXPECT_THROW(eval_h_series({0.5, 1.0}, -1.0), DomainError);
  EXPECT_THROW(eval_h_series({0.0, 1.0}, 1.0), DomainError);
  EXPECT_THROW(eval_h_series({1.5, 1.0}, 1.0), DomainError);
}

TEST(EvalHSeries, SingularFirstTermNearZero) {
  const double near0 = eval_h_series({0.25, -1.0}, 1e-8).value;
  EXPECT_GT(near0, 1e5);
}

TEST(FracDeriv, TermShiftAtOrderOne) {
  constexpr int K = 30;
  const double lhs = frac_deriv_h_truncated({1.0, 2.0}, 1.0, K);
  long double partial = 0.0L;  // K-1 term e^{2x} partial sum at x = 1
  long double t = 1.0L;
  for (int k = 0; k < K - 1; ++k) {
    partial += t;
    t *= 2.0L / (k + 1);
  }
  EXPECT_NEAR(lhs, 2.0 * static_cast<double>(partial), 1e-12);
}

TEST(FracDeriv, DeltaTermDrops) {
  EXPECT_EQ(frac_deriv_h_truncated({1.0 / 3.0, 0.0}, 0.7, 2), 0.0);
  EXPECT_EQ(frac_deriv_h_truncated({1.0 / 3.0, 0.0}, 0.7, 20), 0.0);
}

TEST(FracDeriv, EigenPropertyGrid) {
  for (double alpha : {1.0 / 3.0, 3.0 / 5.0, 9.0 / 11.0}) {
    for (double lambda : {-2.0, -1.0, 0.5, 1.0}) {
      for (double x = 0.1; x <= 3.0; x += 0.29) {
        const HParams p{alpha, lambda};
        for (int K : {2, 10, 50}) {
          const double lhs = frac_deriv_h_truncated(p, x, K);
          const double rhs = lambda * h_series_partial(p, x, K - 1);
          EXPECT_LE(std::fabs(lhs - rhs), 1e-12 * std::max(1.0, std::fabs(rhs)))
              << alpha << ' ' << lambda << ' ' << x << ' ' << K;
        }
      }
    }
  }
  const double v = frac_deriv_h_truncated({0.6, -1.0}, 1.5, 50);
  EXPECT_NEAR(v, -h_series_partial({0.6, -1.0}, 1.5, 49), 1e-12);
}

}  // namespace
}  // namespace fraccauchy
