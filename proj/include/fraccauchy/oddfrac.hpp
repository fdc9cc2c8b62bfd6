#pragma once

// Odd/odd rational approximation alpha ~ (2m+1)/(2n+1). An odd root of a
// negative real stays real, which is what lets the exponential
// representation work with negative eigenvalues.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "fraccauchy/error.hpp"

namespace fraccauchy {

struct OddFraction {
  std::int64_t m = 0;
  std::int64_t n = 0;
  double err = 0.0;  // |alpha - (2m+1)/(2n+1)| for the alpha it was built from

  std::int64_t numerator() const { return 2 * m + 1; }
  std::int64_t denominator() const { return 2 * n + 1; }
};

/// (2m+1)/(2n+1) as a double.
inline double value(const OddFraction& f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

/// Wraps a given (m, n) pair as a certificate for `alpha`.
inline OddFraction make_odd_fraction(double alpha, std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0 || m > n) {
    throw DomainError("OddFraction: need 0 <= m <= n");
  }
  OddFraction f{m, n, 0.0};
  f.err = std::fabs(alpha - value(f));
  return f;
}

inline constexpr std::int64_t kDefaultOddSearchCap = 10'000'000;

/// Smallest n for which some m in [0, n] gives |alpha - (2m+1)/(2n+1)| < eps;
/// m is the error minimiser for that n.
inline OddFraction approximate(double alpha, double eps,
                               std::int64_t n_cap = kDefaultOddSearchCap) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("approximate: alpha must lie in (0, 1)");
  }
  if (!(eps > 0.0)) throw DomainError("approximate: eps must be > 0");

  for (std::int64_t n = 0; n <= n_cap; ++n) {
    const double denom = static_cast<double>(2 * n + 1);
    const auto centre = static_cast<std::int64_t>(std::llround((alpha * denom - 1.0) / 2.0));
    OddFraction best{};
    bool have = false;
    // Rounding can land one step off the true minimiser; check neighbours.
    for (std::int64_t m = centre - 1; m <= centre + 1; ++m) {
      const std::int64_t mc = std::clamp<std::int64_t>(m, 0, n);
      OddFraction cand{mc, n, 0.0};
      cand.err = std::fabs(alpha - value(cand));
      if (!have || cand.err < best.err) {
        best = cand;
        have = true;
      }
    }
    if (best.err < eps) return best;
  }
  throw SearchExhausted("approximate: no odd fraction within eps = " + std::to_string(eps) +
                        " for n <= " + std::to_string(n_cap));
}

}  // namespace fraccauchy
