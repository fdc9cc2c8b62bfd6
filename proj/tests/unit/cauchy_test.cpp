#include "fraccauchy/cauchy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "support/oracles.hpp"

namespace fraccauchy {
namespace {

double closed_form(const CauchySolution& sol, double x) {
  double y = 0.0;
  for (std::size_t k = 0; k < sol.roots.size(); ++k) y += sol.c[k] * std::exp(sol.roots[k] * x);
  return y;
}

TEST(CharRoots, Quadratic) {
  const auto r = char_roots(CharPoly{{1.0, 3.0, 2.0}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], -2.0, 1e-14);
  EXPECT_NEAR(r[1], -1.0, 1e-14);
}

TEST(CharRoots, Linear) {
  EXPECT_EQ(char_roots(CharPoly{{1.0, 1.0}}), std::vector<double>{-1.0});
}

TEST(CharRoots, CubicAgainstBisection) {
  const std::vector<double> coeffs{1.0, -6.0, 11.0, -6.0};
  const auto r = char_roots(CharPoly{coeffs});
  const auto ref = oracle::bisection_roots(coeffs, -10.0, 10.0, 2001);
  ASSERT_EQ(r.size(), 3u);
  ASSERT_EQ(ref.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(r[i], i + 1.0, 1e-13);
    EXPECT_NEAR(r[i], ref[i], 1e-13);
  }
}

TEST(CharRoots, QuarticAgainstBisection) {
  // (l+3)(l+1)(l-0.5)(l-2)
  const std::vector<double> coeffs{1.0, 1.5, -6.5, -4.5, 3.0};
  const auto r = char_roots(CharPoly{coeffs});
  const auto ref = oracle::bisection_roots(coeffs, -10.0, 10.0, 1999);
  ASSERT_EQ(ref.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(r[i], ref[i], 1e-12);
}

TEST(CharRoots, Rejections) {
  EXPECT_THROW(char_roots(CharPoly{{1.0, 0.0, 1.0}}), ComplexRootsUnsupported);
  EXPECT_THROW(char_roots(CharPoly{{1.0, 2.0, 1.0}}), RepeatedRoots);
  EXPECT_THROW(char_roots(CharPoly{{1.0, -3.0, 3.0, -1.0}}), RepeatedRoots);
  EXPECT_THROW(char_roots(CharPoly{{2.0, 1.0}}), DomainError);
  EXPECT_THROW(char_roots(CharPoly{{1.0}}), DomainError);
}

TEST(SolveCoefficients, FirstOrder) {
  const CauchyProblem prob{0.5, {1.0}, {2.0}, 1.5};
  const auto sol = solve(prob);
  const double h0 = static_cast<double>(oracle::h_sum(0.5, -1.0, 1.5, 300));
  ASSERT_EQ(sol.c.size(), 1u);
  EXPECT_NEAR(sol.c[0], 2.0 / h0, 1e-12 * std::fabs(2.0 / h0));
}

TEST(SolveCoefficients, ZeroInitialData) {
  const auto sol = solve({0.7, {3.0, 2.0}, {0.0, 0.0}, 1.0});
  EXPECT_EQ(sol.c[0], 0.0);
  EXPECT_EQ(sol.c[1], 0.0);
  EXPECT_EQ(eval_solution_series(sol, 2.0), 0.0);
}

TEST(SolveCoefficients, ClassicalSecondOrder) {
  const auto sol = solve({1.0, {3.0, 2.0}, {1.0, 0.0}, 1.0});
  ASSERT_EQ(sol.roots.size(), 2u);
  EXPECT_NEAR(sol.roots[0], -2.0, 1e-15);
  EXPECT_NEAR(sol.roots[1], -1.0, 1e-15);
  // roots ascending: c for -2 is -e^2, for -1 is 2e.
  EXPECT_NEAR(sol.c[0], -std::exp(2.0), 1e-12 * std::exp(2.0));
  EXPECT_NEAR(sol.c[1], 2.0 * std::exp(1.0), 1e-12 * std::exp(1.0));
  for (double x : {1.0, 1.5, 2.0, 3.0}) {
    const double exact = 2.0 * std::exp(-(x - 1.0)) - std::exp(-2.0 * (x - 1.0));
    EXPECT_NEAR(eval_solution_series(sol, x), exact, 1e-12);
  }
}

TEST(SolveCoefficients, FirstOrderClassicalValue) {
  const auto sol = solve({1.0, {1.0}, {1.0}, 1.0});
  EXPECT_NEAR(eval_solution_series(sol, 2.0), std::exp(-1.0), 1e-14);
  EXPECT_NEAR(eval_solution_exp(sol, {0, 0, 0.0}, 2.0), std::exp(-1.0), 1e-14);
}

TEST(SolveCoefficients, VandermondeAgainstCramer) {
  const std::vector<std::vector<double>> node_sets = {
      {-1.5}, {-2.0, 0.5}, {-3.0, -0.25, 1.75}, {-1.0, 0.3, 2.0}};
  const std::vector<double> rhs_full{0.7, -1.3, 2.1};
  for (const auto& nodes : node_sets) {
    const std::size_t p = nodes.size();
    std::vector<double> rhs(rhs_full.begin(), rhs_full.begin() + p);
    std::vector<double> d = rhs;
    solve_vandermonde(nodes, d);
    std::vector<std::vector<long double>> v(p, std::vector<long double>(p));
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t i = 0; i < p; ++i) v[k][i] = std::pow(static_cast<long double>(nodes[i]), k);
    }
    const long double det = oracle::determinant(v);
    for (std::size_t i = 0; i < p; ++i) {
      auto vi = v;
      for (std::size_t k = 0; k < p; ++k) vi[k][i] = rhs[k];
      const double cramer = static_cast<double>(oracle::determinant(vi) / det);
      EXPECT_NEAR(d[i], cramer, 1e-10 * std::max(1.0, std::fabs(cramer)));
    }
  }
}

TEST(SolveCoefficients, InitialConditionResiduals) {
  const std::vector<CauchyProblem> problems = {
      {0.5, {1.0}, {1.0}, 1.0},
      {0.6, {3.0, 2.0}, {1.0, 0.0}, 1.0},
      {9.0 / 11.0, {-6.0, 11.0, -6.0}, {1.0, 1.0, 1.0}, 1.0},
      {1.0 / 3.0, {1.0, -2.0}, {0.5, -2.0}, 0.7},
  };
  for (const auto& prob : problems) {
    const auto sol = solve(prob);
    EXPECT_LE(verify_initial_conditions(sol).max_scaled, 1e-8) << prob.alpha;
  }
}

TEST(SolveCoefficients, CubicExampleFrozen) {
  const auto sol = solve({9.0 / 11.0, {-6.0, 11.0, -6.0}, {1.0, 1.0, 1.0}, 1.0});
  EXPECT_NEAR(sol.c[0], 0.29759306246232232468, 1e-12);  // mpmath
  EXPECT_NEAR(sol.c[1], 0.0, 1e-14);
  EXPECT_NEAR(sol.c[2], 0.0, 1e-14);
}

TEST(SolveCoefficients, Deterministic) {
  const CauchyProblem prob{0.6, {1.0, -2.0, -0.5}, {1.0, 0.3, -0.2}, 1.2};
  const auto a = solve(prob);
  const auto b = solve(prob);
  ASSERT_EQ(a.c.size(), b.c.size());
  EXPECT_EQ(0, std::memcmp(a.c.data(), b.c.data(), a.c.size() * sizeof(double)));
  EXPECT_EQ(0, std::memcmp(a.roots.data(), b.roots.data(), a.roots.size() * sizeof(double)));
  const double ya = eval_solution_series(a, 2.5);
  const double yb = eval_solution_series(b, 2.5);
  EXPECT_EQ(0, std::memcmp(&ya, &yb, sizeof ya));
}

TEST(SolveCoefficients, Failures) {
  const CauchyProblem prob{0.5, {3.0, 2.0}, {1.0, 0.0}, 1.0};
  EXPECT_THROW(solve_coefficients(prob, {-1.0, -1.0}), SingularSystem);
  EXPECT_THROW(solve_coefficients(prob, {-1.0}), DomainError);
  // The basis series overflows before it could underflow.
  EXPECT_THROW(solve_coefficients({1.0, {800.0}, {1.0}, 1.0}, {-800.0}), NonConvergence);
  EXPECT_THROW(solve({1.2, {1.0}, {1.0}, 1.0}), DomainError);
  EXPECT_THROW(solve({0.5, {1.0}, {1.0, 2.0}, 1.0}), DomainError);
  EXPECT_THROW(solve({0.5, {1.0}, {1.0}, 0.0}), DomainError);
}

TEST(EvalSolutionExp, MatchesSeriesWhenOrderIsOneOverOdd) {
  const auto sol = solve({1.0 / 3.0, {1.0}, {1.0}, 0.5});
  for (int i = 0; i <= 24; ++i) {
    const double x = 0.6 + 2.4 * i / 24.0;
    const double series = eval_solution_series(sol, x);
    EXPECT_NEAR(eval_solution_exp(sol, {0, 1, 0.0}, x), series,
                1e-6 * std::max(1.0, std::fabs(series)))
        << x;
  }
}

TEST(EvalSolutionExp, IntegerOrderReducesToExponentials) {
  for (double a1 : {0.5, 1.0, 2.0}) {
    const auto sol = solve({1.0, {a1}, {1.0}, 1.0});
    for (int i = 0; i <= 20; ++i) {
      const double x = 1.0 + 5.0 * i / 20.0;
      const double exact = std::exp(-a1 * (x - 1.0));
      EXPECT_NEAR(eval_solution_exp(sol, {0, 0, 0.0}, x), exact, 1e-13);
      EXPECT_NEAR(eval_solution_series(sol, x), exact, 1e-13);
    }
  }
}

TEST(ClassicalLimit, SupDistanceShrinks) {
  const std::vector<CauchyProblem> problems = {{1.0, {1.0}, {1.0}, 1.0},
                                               {1.0, {3.0, 2.0}, {1.0, 0.0}, 1.0}};
  const double frozen[2][4] = {{0.123, 0.092, 0.060, 0.029}, {0.145, 0.128, 0.098, 0.055}};
  for (std::size_t p = 0; p < problems.size(); ++p) {
    const auto classical = solve(problems[p]);
    double previous = INFINITY;
    int idx = 0;
    for (int j : {1, 2, 4, 10}) {
      auto prob = problems[p];
      prob.alpha = (2.0 * j + 1) / (2.0 * j + 3);
      const auto sol = solve(prob);
      double sup = 0.0;
      for (int i = 0; i <= 40; ++i) {
        const double x = 1.0 + 2.0 * i / 40.0;
        sup = std::max(sup, std::fabs(eval_solution_series(sol, x) - closed_form(classical, x)));
      }
      EXPECT_LT(sup, previous) << "problem " << p << " j=" << j;
      EXPECT_NEAR(sup, frozen[p][idx], 1e-3) << "problem " << p << " j=" << j;  // mpmath
      previous = sup;
      ++idx;
    }
  }
}

}  // namespace
}  // namespace fraccauchy
