// Prints h_{1/3}(x, rho) from the power series and from the exponential
// representation side by side.

#include <cstdio>

#include "fraccauchy/fraccauchy.hpp"

int main() {
  using namespace fraccauchy;
  const ExpReprParams p{1, -1.0};
  std::printf("%6s %22s %22s %10s\n", "x", "series", "exponential", "diff");
  for (double x : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double s = eval_h_series({1.0 / 3.0, p.rho}, x).value;
    const double e = eval_h_exp(p, x);
    std::printf("%6.2f %22.15f %22.15f %10.2e\n", x, s, e, s - e);
  }
}
