// Fractional relaxation D^alpha y + y = 0, y(1) = 1, for alpha approaching 1.

#include <cmath>
#include <cstdio>

#include "fraccauchy/fraccauchy.hpp"

int main() {
  using namespace fraccauchy;
  const double xs[] = {1.0, 1.5, 2.0, 3.0};
  std::printf("%10s", "alpha");
  for (double x : xs) std::printf("   y(%.1f)    ", x);
  std::printf("\n");
  for (int j : {1, 2, 4, 10}) {
    const double alpha = (2.0 * j + 1) / (2.0 * j + 3);
    const auto sol = solve({alpha, {1.0}, {1.0}, 1.0});
    std::printf("%10.6f", alpha);
    for (double x : xs) std::printf("  %12.9f", eval_solution_series(sol, x));
    std::printf("\n");
  }
  std::printf("%10s", "exp");
  for (double x : xs) std::printf("  %12.9f", std::exp(-(x - 1.0)));
  std::printf("\n");
}
