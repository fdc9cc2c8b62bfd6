#pragma once

// Cauchy problem for a linear constant-coefficient fractional ODE
//
//   D^{alpha p} y + a_1 D^{alpha (p-1)} y + ... + a_p y = 0,   x > x0 > 0,
//   D^{alpha k} y(x0) = beta_k,                                 k = 0..p-1.
//
// With distinct real roots lambda_i of the characteristic polynomial the
// solution is y = sum_i c_i h_alpha(x, lambda_i). Writing d_i = c_i h_alpha(x0,
// lambda_i) turns the initial conditions into a plain Vandermonde system
// sum_i lambda_i^k d_i = beta_k, solved in O(p^2) by Bjorck-Pereyra.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fraccauchy/error.hpp"
#include "fraccauchy/exprepr.hpp"
#include "fraccauchy/ml.hpp"
#include "fraccauchy/oddfrac.hpp"
#include "fraccauchy/quad.hpp"

namespace fraccauchy {

struct CauchyProblem {
  double alpha = 1.0;
  std::vector<double> a;     // a_1..a_p
  std::vector<double> beta;  // beta_0..beta_{p-1}
  double x0 = 1.0;

  int order() const { return static_cast<int>(a.size()); }

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("CauchyProblem: alpha must lie in (0, 1]");
    if (a.empty()) throw DomainError("CauchyProblem: need at least one coefficient");
    if (beta.size() != a.size()) {
      throw DomainError("CauchyProblem: need as many initial values as coefficients");
    }
    if (!(x0 > 0.0) || !std::isfinite(x0)) throw DomainError("CauchyProblem: x0 must be > 0");
    for (double v : a) {
      if (!std::isfinite(v)) throw DomainError("CauchyProblem: non-finite coefficient");
    }
    for (double v : beta) {
      if (!std::isfinite(v)) throw DomainError("CauchyProblem: non-finite initial value");
    }
  }
};

/// Monic lambda^p + a_1 lambda^{p-1} + ... + a_p, stored highest degree first.
struct CharPoly {
  std::vector<double> coeffs;

  static CharPoly from_problem(const CauchyProblem& prob) {
    CharPoly poly;
    poly.coeffs.reserve(prob.a.size() + 1);
    poly.coeffs.push_back(1.0);
    poly.coeffs.insert(poly.coeffs.end(), prob.a.begin(), prob.a.end());
    return poly;
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  template <class T>
  T operator()(T z) const {
    T acc = T(coeffs.front());
    for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc * z + T(coeffs[i]);
    return acc;
  }
};

struct RootOptions {
  double imag_tol = 1e-9;         // |Im| above tol * scale => complex root
  double separation_tol = 1e-8;   // relative to max(1, max |root|)
  int max_iter = 500;
};

// Aberth resolves a double root only to about sqrt(eps) and a triple root to
// about eps^(1/3); clusters tighter than this are reported as repeated.
inline constexpr double kRootClusterRadius = 1e-5;

namespace detail {

inline double root_scale(const std::vector<std::complex<double>>& z) {
  double s = 1.0;
  for (const auto& v : z) s = std::max(s, std::abs(v));
  return s;
}

inline std::complex<double> newton_ratio(const CharPoly& poly, std::complex<double> z) {
  std::complex<double> p = poly.coeffs.front();
  std::complex<double> dp = 0.0;
  for (std::size_t i = 1; i < poly.coeffs.size(); ++i) {
    dp = dp * z + p;
    p = p * z + poly.coeffs[i];
  }
  if (dp == 0.0) return 0.0;
  return p / dp;
}

}  // namespace detail

/// Real roots of a monic polynomial, ascending. Simultaneous Aberth iteration
/// from a perturbed circle, then a few Newton steps per root.
inline std::vector<double> char_roots(const CharPoly& poly, const RootOptions& opt = {}) {
  const int p = poly.degree();
  if (p < 1) throw DomainError("char_roots: degree must be >= 1");
  if (poly.coeffs.front() != 1.0) throw DomainError("char_roots: polynomial must be monic");
  for (double c : poly.coeffs) {
    if (!std::isfinite(c)) throw DomainError("char_roots: non-finite coefficient");
  }
  if (p == 1) return {-poly.coeffs[1]};

  // Fujiwara-type radius 2 max |a_k|^(1/k).
  double radius = 0.0;
  for (int k = 1; k <= p; ++k) {
    radius = std::max(radius, std::pow(std::fabs(poly.coeffs[k]), 1.0 / k));
  }
  radius = std::max(2.0 * radius, 1e-3);

  std::vector<std::complex<double>> z(p);
  for (int k = 0; k < p; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / p + 0.4);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  bool converged = false;
  for (int iter = 0; iter < opt.max_iter && !converged; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < p; ++k) {
      const auto w = detail::newton_ratio(poly, z[k]);
      std::complex<double> repulsion = 0.0;
      for (int j = 0; j < p; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const auto step = w / (1.0 - w * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[k] -= step;
        max_step = std::max(max_step, std::abs(step));
      }
    }
    converged = max_step <= 4.0 * eps * detail::root_scale(z);
  }
  for (auto& root : z) {
    for (int it = 0; it < 3; ++it) {
      const auto step = detail::newton_ratio(poly, root);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      root -= step;
    }
  }

  const double scale = detail::root_scale(z);
  const double cluster = std::max(opt.separation_tol, kRootClusterRadius) * scale;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (std::abs(z[i] - z[j]) <= cluster) {
        throw RepeatedRoots("char_roots: roots near " + std::to_string(z[i].real()) +
                            " coincide; only distinct roots are supported");
      }
    }
  }
  if (!converged) {
    throw NoConvergence("char_roots: Aberth iteration did not converge in " +
                        std::to_string(opt.max_iter) + " steps");
  }
  std::vector<double> roots;
  roots.reserve(p);
  for (const auto& root : z) {
    if (std::fabs(root.imag()) > opt.imag_tol * scale) {
      throw ComplexRootsUnsupported("char_roots: complex root " + std::to_string(root.real()) +
                                    (root.imag() < 0 ? " - " : " + ") +
                                    std::to_string(std::fabs(root.imag())) + "i");
    }
    roots.push_back(root.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct CauchySolution {
  std::vector<double> roots;  // lambda_1..lambda_p
  std::vector<double> c;      // mixing coefficients
  CauchyProblem problem;
};

/// Solves sum_i lambda_i^k d_i = rhs_k in place (Bjorck-Pereyra, dual form).
inline void solve_vandermonde(const std::vector<double>& nodes, std::vector<double>& rhs) {
  const int n = static_cast<int>(nodes.size()) - 1;
  for (int k = 0; k < n; ++k) {
    for (int i = n; i >= k + 1; --i) rhs[i] -= nodes[k] * rhs[i - 1];
  }
  for (int k = n - 1; k >= 0; --k) {
    for (int i = k + 1; i <= n; ++i) rhs[i] /= nodes[i] - nodes[i - k - 1];
    for (int i = k; i < n; ++i) rhs[i] -= rhs[i + 1];
  }
}

inline CauchySolution solve_coefficients(const CauchyProblem& prob, std::vector<double> roots,
                                         const SeriesControl& ctl = {},
                                         double separation_tol = RootOptions{}.separation_tol) {
  prob.validate();
  const int p = prob.order();
  if (static_cast<int>(roots.size()) != p) {
    throw DomainError("solve_coefficients: expected " + std::to_string(p) + " roots");
  }
  double scale = 1.0;
  for (double r : roots) scale = std::max(scale, std::fabs(r));
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (std::fabs(roots[i] - roots[j]) <= separation_tol * scale) {
        throw SingularSystem("solve_coefficients: Vandermonde determinant vanishes (roots " +
                             std::to_string(roots[i]) + " and " + std::to_string(roots[j]) +
                             ")");
      }
    }
  }

  std::vector<double> basis(p);
  for (int i = 0; i < p; ++i) {
    basis[i] = eval_h_series({prob.alpha, roots[i]}, prob.x0, ctl).value;
    if (!std::isfinite(basis[i]) || std::fabs(basis[i]) < 1e-300) {
      throw ZeroBasisValue("solve_coefficients: h_alpha(x0, " + std::to_string(roots[i]) +
                           ") is zero or not finite");
    }
  }

  std::vector<double> d = prob.beta;
  solve_vandermonde(roots, d);
  CauchySolution sol{std::move(roots), std::vector<double>(p), prob};
  for (int i = 0; i < p; ++i) sol.c[i] = d[i] / basis[i];
  return sol;
}

struct SolverOptions {
  RootOptions roots;
  SeriesControl series;
};

inline CauchySolution solve(const CauchyProblem& prob, const SolverOptions& opt = {}) {
  prob.validate();
  auto roots = char_roots(CharPoly::from_problem(prob), opt.roots);
  return solve_coefficients(prob, std::move(roots), opt.series, opt.roots.separation_tol);
}

/// y(x) = sum_k c_k h_alpha(x, lambda_k) from the series.
inline double eval_solution_series(const CauchySolution& sol, double x,
                                   const SeriesControl& ctl = {}) {
  double y = 0.0;
  for (std::size_t k = 0; k < sol.roots.size(); ++k) {
    if (sol.c[k] == 0.0) continue;
    y += sol.c[k] * eval_h_series({sol.problem.alpha, sol.roots[k]}, x, ctl).value;
  }
  return y;
}

/// y(x) in exponential form: each basis function is replaced by
/// h_{1/(2n+1)}(x, lambda_k^(1/(2m+1))) evaluated through eval_h_exp, with the
/// real odd root. For m = 0 this is exactly h_alpha(x, lambda_k).
inline double eval_solution_exp(const CauchySolution& sol, const OddFraction& frac, double x,
                                int rule_order = kDefaultQuadOrder) {
  if (frac.m < 0 || frac.n < 0 || frac.m > frac.n) {
    throw DomainError("eval_solution_exp: need 0 <= m <= n");
  }
  double y = 0.0;
  for (std::size_t k = 0; k < sol.roots.size(); ++k) {
    if (sol.c[k] == 0.0) continue;
    const ExpReprParams p{static_cast<int>(frac.n), odd_root(sol.roots[k], frac.m)};
    y += sol.c[k] * eval_h_exp(p, x, rule_order);
  }
  return y;
}

struct ResidualReport {
  std::vector<double> residuals;  // sum_i c_i lambda_i^k h_i - beta_k
  double max_scaled = 0.0;        // max_k |residual_k| / max(1, |beta_k|)
};

/// Checks D^{alpha k} y(x0) = beta_k using D^{alpha k} h = lambda^k h.
inline ResidualReport verify_initial_conditions(const CauchySolution& sol,
                                                const SeriesControl& ctl = {}) {
  const int p = static_cast<int>(sol.roots.size());
  std::vector<double> basis(p);
  for (int i = 0; i < p; ++i) {
    basis[i] = eval_h_series({sol.problem.alpha, sol.roots[i]}, sol.problem.x0, ctl).value;
  }
  ResidualReport report;
  report.residuals.resize(p);
  for (int k = 0; k < p; ++k) {
    long double acc = 0.0L;
    for (int i = 0; i < p; ++i) {
      acc += static_cast<long double>(sol.c[i]) * std::pow(sol.roots[i], k) * basis[i];
    }
    const double beta = sol.problem.beta[k];
    report.residuals[k] = static_cast<double>(acc - beta);
    report.max_scaled =
        std::max(report.max_scaled, std::fabs(report.residuals[k]) / std::max(1.0, std::fabs(beta)));
  }
  return report;
}

}  // namespace fraccauchy
