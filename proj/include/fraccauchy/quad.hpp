#pragma once

// Gauss-Jacobi quadrature on [0, 1] with weight (1 - u)^gamma, -1 < gamma <= 0,
// for weakly singular convolutions
//
//   (1 / Gamma(gamma + 1)) * int_0^x (x - t)^gamma g(t) dt.
//
// Nodes come from the Golub-Welsch eigenproblem of the Jacobi matrix (implicit
// QL, eigenvalues only), are polished by Newton on the orthonormal
// recurrence, and weights use the Christoffel form 1 / sum_k p_k(u)^2.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "fraccauchy/error.hpp"
#include "fraccauchy/gamma.hpp"

namespace fraccauchy {

inline constexpr int kDefaultQuadOrder = 64;

struct QuadratureRule {
  double gamma_exp = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

namespace detail {

/// Orthonormal three-term recurrence for (1-u)^g on [0, 1]:
///   sqrt(b[k+1]) p_{k+1} = (u - a[k]) p_k - sqrt(b[k]) p_{k-1}.
struct JacobiRecurrence {
  std::vector<double> a;        // a[0..n-1]
  std::vector<double> sqrt_b;   // sqrt_b[k] for k = 0..n, sqrt_b[0] unused
  double mu0 = 0.0;             // integral of the weight
};

inline JacobiRecurrence shifted_jacobi_recurrence(double g, int n) {
  // Jacobi parameters (g, 0) on [-1, 1], then u = (1 + xi) / 2.
  JacobiRecurrence rec;
  rec.a.resize(n);
  rec.sqrt_b.assign(n + 1, 0.0);
  rec.mu0 = 1.0 / (g + 1.0);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + g;
    const double alpha = (k == 0) ? -g / (g + 2.0) : -g * g / (s * (s + 2.0));
    rec.a[k] = 0.5 * (1.0 + alpha);
  }
  for (int k = 1; k <= n; ++k) {
    const double kk = k;
    const double s = 2.0 * kk + g;
    const double beta = 4.0 * kk * kk * (kk + g) * (kk + g) /
                        (s * s * (s + 1.0) * (s - 1.0));
    rec.sqrt_b[k] = 0.5 * std::sqrt(beta);
  }
  return rec;
}

/// Eigenvalues of a symmetric tridiagonal matrix (implicit QL with Wilkinson
/// shifts). `off[i]` couples rows i and i+1; off is clobbered.
inline std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                                   std::vector<double> off) {
  const int n = static_cast<int>(diag.size());
  off.resize(n, 0.0);
  off[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(diag[m]) + std::fabs(diag[m + 1]);
        if (std::fabs(off[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw ConvergenceError("Gauss-Jacobi: QL iteration did not converge");
        double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          const double f = s * off[i];
          const double b = c * off[i];
          r = std::hypot(f, g);
          off[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            off[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

struct OrthoValues {
  double p_n = 0.0;       // p_N(u)
  double dp_n = 0.0;      // p_N'(u)
  double sum_sq = 0.0;    // sum_{k<N} p_k(u)^2
};

inline OrthoValues eval_orthonormal(const JacobiRecurrence& rec, double u) {
  const int n = static_cast<int>(rec.a.size());
  double prev = 0.0, dprev = 0.0;
  double cur = 1.0 / std::sqrt(rec.mu0), dcur = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_sq += cur * cur;
    const double lower = (k > 0) ? rec.sqrt_b[k] : 0.0;
    const double next = ((u - rec.a[k]) * cur - lower * prev) / rec.sqrt_b[k + 1];
    const double dnext = (cur + (u - rec.a[k]) * dcur - lower * dprev) / rec.sqrt_b[k + 1];
    prev = cur;
    dprev = dcur;
    cur = next;
    dcur = dnext;
  }
  return {cur, dcur, sum_sq};
}

}  // namespace detail

/// Builds the `order`-point rule exact for polynomials of degree <= 2*order-1
/// against the weight (1-u)^gamma_exp on [0, 1].
inline QuadratureRule build_rule(double gamma_exp, int order) {
  if (!(gamma_exp > -1.0 && gamma_exp <= 0.0)) {
    throw DomainError("build_rule: gamma_exp must lie in (-1, 0]");
  }
  if (order < 1) throw DomainError("build_rule: order must be >= 1");

  const auto rec = detail::shifted_jacobi_recurrence(gamma_exp, order);
  std::vector<double> off(order, 0.0);
  for (int k = 0; k + 1 < order; ++k) off[k] = rec.sqrt_b[k + 1];
  std::vector<double> nodes = detail::tridiagonal_eigenvalues(rec.a, std::move(off));

  QuadratureRule rule;
  rule.gamma_exp = gamma_exp;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double u = nodes[i];
    for (int it = 0; it < 3; ++it) {
      const auto v = detail::eval_orthonormal(rec, u);
      if (v.dp_n == 0.0) break;
      const double step = v.p_n / v.dp_n;
      const double polished = u - step;
      if (!(polished > 0.0 && polished < 1.0) || std::fabs(step) > 1e-6) break;
      u = polished;
      if (std::fabs(step) <= 1e-17) break;
    }
    const auto v = detail::eval_orthonormal(rec, u);
    rule.nodes[i] = u;
    rule.weights[i] = 1.0 / v.sum_sq;
    if (!(u > 0.0 && u < 1.0) || !(rule.weights[i] > 0.0)) {
      throw ConvergenceError("build_rule: degenerate node or weight at index " +
                             std::to_string(i));
    }
  }
  return rule;
}

/// Process-wide cache keyed by (gamma_exp, order); safe under concurrent use.
inline std::shared_ptr<const QuadratureRule> cached_rule(double gamma_exp, int order) {
  static std::mutex mutex;
  static std::map<std::pair<double, int>, std::shared_ptr<const QuadratureRule>> cache;
  const auto key = std::make_pair(gamma_exp, order);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const QuadratureRule>(build_rule(gamma_exp, order));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

/// (1/Gamma(gamma+1)) int_0^x (x - t)^gamma g(t) dt via t = x u.
template <class Integrand>
double integrate_singular(const QuadratureRule& rule, double x, Integrand&& g) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("integrate_singular: x must be finite and > 0");
  }
  double sum = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    sum += rule.weights[i] * g(x * rule.nodes[i]);
  }
  const double scale = std::pow(x, rule.gamma_exp + 1.0) * recip_gamma(rule.gamma_exp + 1.0);
  return scale * sum;
}

}  // namespace fraccauchy
