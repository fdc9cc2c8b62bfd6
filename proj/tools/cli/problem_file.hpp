#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fraccauchy/cauchy.hpp"
#include "fraccauchy/ml.hpp"
#include "fraccauchy/oddfrac.hpp"

namespace fraccauchy::cli {

/// Malformed or unreadable problem file.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double x_start = 0.0;
  double x_end = 0.0;
  int steps = 0;

  /// steps points from x_start to x_end inclusive.
  std::vector<double> points() const;
};

/// JSON problem description:
///
///   { "alpha": 0.6 | {"m": 1, "n": 2},
///     "a": [3, 2], "beta": [1, 0], "x0": 1,
///     "grid": {"x_start": 1, "x_end": 3, "steps": 21},
///     "quadrature_order": 64,                      (optional)
///     "series": {"max_terms": 500, "tail_tol": 1e-15} }   (optional)
struct ProblemFile {
  double alpha = 1.0;
  std::optional<OddFraction> odd;  // present when alpha was given as {m, n}
  std::vector<double> a;
  std::vector<double> beta;
  double x0 = 1.0;
  GridSpec grid;
  std::optional<int> quadrature_order;
  SeriesControl series;

  CauchyProblem problem() const { return {alpha, a, beta, x0}; }
};

ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem_file(const std::filesystem::path& path);

}  // namespace fraccauchy::cli
