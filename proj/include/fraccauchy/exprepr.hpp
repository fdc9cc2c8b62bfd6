#pragma once

// Exponential-integral form of h_{1/N}(x, rho), N = 2n + 1.
//
// Splitting the series by residue of the term index mod N gives N
// sub-series J_0 .. J_{2n}. The last one has integer exponents and sums to
// rho^{2n} e^{rho^N x}; for s < 2n, J_s = rho^s D_s(x) with
//
//   D_s(x) = d/dx int_0^x (x-t)^g / Gamma(g+1) e^{c t} dt,
//   g = (s - 2n)/N in (-1, 0),  c = rho^N.
//
// The derivative is taken analytically by integration by parts,
//
//   D_s(x) = x^g / Gamma(g+1) + c int_0^x (x-t)^g / Gamma(g+1) e^{c t} dt,
//
// so only the weakly singular integral is done numerically. The integration
// constants that appear when the fractional integral is inverted are zero:
// matching the series term by term leaves no room for anything else.

#include <cmath>
#include <cstdint>
#include <string>

#include "fraccauchy/error.hpp"
#include "fraccauchy/gamma.hpp"
#include "fraccauchy/quad.hpp"

namespace fraccauchy {

struct ExpReprParams {
  int n = 0;          // base order is 1/(2n+1)
  double rho = 0.0;   // series ratio

  int denominator() const { return 2 * n + 1; }

  void validate() const {
    if (n < 0) throw DomainError("ExpReprParams: n must be >= 0");
    if (!std::isfinite(rho)) throw DomainError("ExpReprParams: rho must be finite");
  }
};

/// Real odd root: sign(lambda) |lambda|^(1/(2m+1)).
inline double odd_root(double lambda, std::int64_t m) {
  if (m < 0) throw DomainError("odd_root: m must be >= 0");
  if (m == 0) return lambda;
  return std::copysign(std::pow(std::fabs(lambda), 1.0 / static_cast<double>(2 * m + 1)),
                       lambda);
}

/// Kernel exponent g = (s - 2n)/(2n+1) of the s-th sub-series.
inline double kernel_exponent(int n, int s) {
  return static_cast<double>(s - 2 * n) / static_cast<double>(2 * n + 1);
}

/// D_s(x) for 0 <= s <= 2n-1, via the integration-by-parts form.
inline double conv_deriv_term(const ExpReprParams& p, int s, double x,
                              int rule_order = kDefaultQuadOrder) {
  p.validate();
  if (s < 0 || s > 2 * p.n - 1) {
    throw DomainError("conv_deriv_term: s must lie in [0, 2n-1], got " + std::to_string(s));
  }
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("conv_deriv_term: x must be > 0");
  const double g = kernel_exponent(p.n, s);
  const double c = std::pow(p.rho, p.denominator());
  const double leading = std::pow(x, g) * recip_gamma(g + 1.0);
  if (c == 0.0) return leading;
  const auto rule = cached_rule(g, rule_order);
  return leading + c * integrate_singular(*rule, x, [c](double t) { return std::exp(c * t); });
}

/// h_{1/(2n+1)}(x, rho) = sum_{s<2n} rho^s D_s(x) + rho^{2n} e^{rho^{2n+1} x}.
inline double eval_h_exp(const ExpReprParams& p, double x, int rule_order = kDefaultQuadOrder) {
  p.validate();
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("eval_h_exp: x must be > 0");
  const int two_n = 2 * p.n;
  double sum = 0.0;
  double rho_pow = 1.0;
  for (int s = 0; s < two_n; ++s) {
    sum += rho_pow * conv_deriv_term(p, s, x, rule_order);
    rho_pow *= p.rho;
  }
  return sum + rho_pow * std::exp(std::pow(p.rho, p.denominator()) * x);
}

/// First `terms` terms of the s-th sub-series J_s(x, rho), 0 <= s <= 2n.
inline double sub_series(const ExpReprParams& p, int s, double x, int terms) {
  p.validate();
  if (s < 0 || s > 2 * p.n) throw DomainError("sub_series: s must lie in [0, 2n]");
  if (!(x > 0.0)) throw DomainError("sub_series: x must be > 0");
  const int big_n = p.denominator();
  const long double base = static_cast<long double>(s + 1) / big_n;
  const long double step = std::pow(static_cast<long double>(p.rho), big_n);
  long double coef = std::pow(static_cast<long double>(p.rho), s);
  long double sum = 0.0L;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) coef *= step;
    const long double order = base + k;
    sum += coef * std::pow(static_cast<long double>(x), order - 1.0L) * recip_gamma(order);
  }
  return static_cast<double>(sum);
}

/// Both sides of D^{M/N} h_{1/N}(x, rho) = lambda h_{1/N}(x, rho) with
/// rho = lambda^(1/M), M = 2m+1, N = 2n+1, from the term-wise power rule on a
/// K-term truncation. The first M-1 terms are pushed to exponents below -1
/// and dropped as delta-type terms; their absolute size at x is reported in
/// `dropped_singular` because 1/Gamma is not zero there when m >= 1. The
/// M-th term hits 1/(-1)! = 0.
struct OddOrderEigenReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double discrepancy = 0.0;
  double dropped_singular = 0.0;
  int shifted_terms = 0;
};

inline OddOrderEigenReport check_odd_order_eigen(std::int64_t m, std::int64_t n, double lambda, double x,
                                      int terms) {
  if (m < 0 || n < 0 || m > n) throw DomainError("check_odd_order_eigen: need 0 <= m <= n");
  if (!(x > 0.0)) throw DomainError("check_odd_order_eigen: x must be > 0");
  const std::int64_t big_m = 2 * m + 1;
  const std::int64_t big_n = 2 * n + 1;
  if (terms <= big_m) throw DomainError("check_odd_order_eigen: need more than 2m+1 terms");

  const long double rho = odd_root(lambda, m);
  const long double lx = x;
  auto term = [&](std::int64_t k, long double order) {
    return std::pow(rho, static_cast<long double>(k - 1)) * std::pow(lx, order - 1.0L);
  };

  OddOrderEigenReport report;
  long double lhs = 0.0L;
  long double dropped = 0.0L;
  for (std::int64_t k = 1; k <= terms; ++k) {
    const long double shifted = static_cast<long double>(k - big_m) / big_n;
    const long double value = term(k, shifted) * recip_gamma(shifted);
    if (k < big_m) {
      dropped += std::fabs(value);
    } else {
      lhs += value;
    }
  }
  long double rhs = 0.0L;
  const std::int64_t kept = terms - big_m;
  for (std::int64_t k = 1; k <= kept; ++k) {
    const long double order = static_cast<long double>(k) / big_n;
    rhs += term(k, order) * recip_gamma(order);
  }
  rhs *= lambda;

  report.lhs = static_cast<double>(lhs);
  report.rhs = static_cast<double>(rhs);
  report.discrepancy = static_cast<double>(std::fabs(lhs - rhs));
  report.dropped_singular = static_cast<double>(dropped);
  report.shifted_terms = static_cast<int>(kept);
  return report;
}

}  // namespace fraccauchy
