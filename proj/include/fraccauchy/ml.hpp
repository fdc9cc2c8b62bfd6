#pragma once

// Direct power-series evaluation of the Mittag-Leffler functions E_a(z),
// E_{a,b}(z) and of the fractional eigenfunction
//
//   h_a(x, lambda) = sum_{k>=1} lambda^(k-1) x^(k a - 1) / Gamma(k a),
//
// which satisfies D^a h = lambda h for x > 0 under the Riemann-Liouville
// power rule. These evaluators are the reference the exponential
// representation in exprepr.hpp is checked against.
//
// Sums are accumulated in long double: the alternating series for negative
// arguments cancel heavily and double accumulation loses ~e^(2|z|) ulps.

#include <cmath>
#include <limits>
#include <string>

#include "fraccauchy/error.hpp"
#include "fraccauchy/gamma.hpp"

namespace fraccauchy {

/// Truncation policy for the infinite sums.
struct SeriesControl {
  int max_terms = 500;
  double tail_tol = 1e-15;  // absolute bound on the last kept term
  // When false, hitting max_terms returns the partial sum instead of
  // throwing NonConvergence.
  bool strict = true;

  void validate() const {
    if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
    if (!(tail_tol > 0)) throw DomainError("SeriesControl: tail_tol must be > 0");
  }
};

enum class StopRule { tail_tolerance, max_terms };

inline const char* to_string(StopRule rule) {
  return rule == StopRule::tail_tolerance ? "tail-tolerance" : "max-terms";
}

struct SeriesResult {
  double value = 0.0;
  int terms = 0;
  StopRule stop = StopRule::tail_tolerance;
  double last_term = 0.0;
};

/// Order and eigenvalue of one eigenfunction h_alpha(x, lambda).
struct HParams {
  double alpha = 1.0;
  double lambda = 0.0;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw DomainError("HParams: alpha must lie in (0, 1]");
    }
    if (!std::isfinite(lambda)) throw DomainError("HParams: lambda must be finite");
  }
};

namespace detail {

/// Sums term(0), term(1), ... under `ctl`. Stops once a term is below the
/// tail tolerance and no larger than its predecessor, i.e. past the peak.
template <class TermFn>
SeriesResult sum_series(TermFn&& term, const SeriesControl& ctl, const char* what) {
  ctl.validate();
  long double sum = 0.0L;
  long double prev = std::numeric_limits<long double>::infinity();
  long double last = 0.0L;
  for (int i = 0; i < ctl.max_terms; ++i) {
    last = term(i);
    if (!std::isfinite(last)) {
      throw NonConvergence(std::string(what) + ": term " + std::to_string(i) +
                           " is not finite");
    }
    sum += last;
    const long double size = std::fabs(last);
    if (size < ctl.tail_tol && size <= prev) {
      return {static_cast<double>(sum), i + 1, StopRule::tail_tolerance,
              static_cast<double>(last)};
    }
    prev = size;
  }
  if (ctl.strict) {
    throw NonConvergence(std::string(what) + ": " + std::to_string(ctl.max_terms) +
                         " terms used, last term " +
                         std::to_string(static_cast<double>(last)) +
                         " still above tolerance");
  }
  return {static_cast<double>(sum), ctl.max_terms, StopRule::max_terms,
          static_cast<double>(last)};
}

/// k-th term (k >= 1) of the h series, in long double.
inline long double h_term(double alpha, long double lambda_pow, double x, int k) {
  const long double order = static_cast<long double>(k) * alpha;
  return lambda_pow * std::pow(static_cast<long double>(x), order - 1.0L) *
         recip_gamma(order);
}

inline void require_positive_x(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": x must be finite and > 0");
  }
}

}  // namespace detail

/// E_alpha(z) = sum_k z^k / Gamma(alpha k + 1).
inline SeriesResult eval_E(double alpha, double z, const SeriesControl& ctl = {}) {
  if (!(alpha > 0.0)) throw DomainError("eval_E: alpha must be > 0");
  long double power = 1.0L;
  return detail::sum_series(
      [&](int k) {
        if (k > 0) power *= z;
        return power * recip_gamma(static_cast<long double>(k) * alpha + 1.0L);
      },
      ctl, "eval_E");
}

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
inline SeriesResult eval_E2(double alpha, double beta, double z,
                            const SeriesControl& ctl = {}) {
  if (!(alpha > 0.0)) throw DomainError("eval_E2: alpha must be > 0");
  if (!(beta > 0.0)) throw DomainError("eval_E2: beta must be > 0");
  long double power = 1.0L;
  return detail::sum_series(
      [&](int k) {
        if (k > 0) power *= z;
        return power * recip_gamma(static_cast<long double>(k) * alpha + beta);
      },
      ctl, "eval_E2");
}

/// h_alpha(x, lambda) for x > 0, truncated per `ctl`. The first term
/// x^(alpha-1)/Gamma(alpha) blows up as x -> 0+ when alpha < 1.
inline SeriesResult eval_h_series(const HParams& p, double x,
                                  const SeriesControl& ctl = {}) {
  p.validate();
  detail::require_positive_x(x, "eval_h_series");
  long double lambda_pow = 1.0L;
  return detail::sum_series(
      [&](int i) {
        if (i > 0) lambda_pow *= p.lambda;
        return detail::h_term(p.alpha, lambda_pow, x, i + 1);
      },
      ctl, "eval_h_series");
}

/// Exactly the first `terms` terms of the h series.
inline double h_series_partial(const HParams& p, double x, int terms) {
  p.validate();
  detail::require_positive_x(x, "h_series_partial");
  long double sum = 0.0L;
  long double lambda_pow = 1.0L;
  for (int k = 1; k <= terms; ++k) {
    if (k > 1) lambda_pow *= p.lambda;
    sum += detail::h_term(p.alpha, lambda_pow, x, k);
  }
  return static_cast<double>(sum);
}

/// D^alpha applied term by term to the `terms`-term truncation of h, using
/// D^b (x^a / a!) = x^(a-b) / (a-b)!. The k = 1 term lands on 1/(-1)! = 0,
/// which is the delta(x) contribution that vanishes for x > 0. The result
/// equals lambda * h_series_partial(p, x, terms - 1).
inline double frac_deriv_h_truncated(const HParams& p, double x, int terms) {
  p.validate();
  detail::require_positive_x(x, "frac_deriv_h_truncated");
  if (terms < 2) throw DomainError("frac_deriv_h_truncated: need at least 2 terms");
  long double sum = 0.0L;
  long double lambda_pow = 1.0L;
  const long double lx = x;
  for (int k = 1; k <= terms; ++k) {
    if (k > 1) lambda_pow *= p.lambda;
    // exponent k*alpha - 1 shifted down by alpha
    const long double shifted = static_cast<long double>(k - 1) * p.alpha;
    sum += lambda_pow * std::pow(lx, shifted - 1.0L) * recip_fact(shifted - 1.0L);
  }
  return static_cast<double>(sum);
}

}  // namespace fraccauchy
