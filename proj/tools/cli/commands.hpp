#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <utility>

#include "cli/problem_file.hpp"
#include "cli/sample_series.hpp"
#include "cli/verify_suites.hpp"
#include "fraccauchy/ml.hpp"
#include "fraccauchy/oddfrac.hpp"

namespace fraccauchy::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitComplexRoots = 3,
  kExitRepeatedRoots = 4,
  kExitConvergence = 5,
  kExitVerification = 6,
};

int exit_code_for(const std::exception& e);

inline constexpr const char* kQuadOrderEnv = "FRACCAUCHY_QUAD_ORDER";

/// Quadrature order: problem file, then FRACCAUCHY_QUAD_ORDER, then 64.
int resolve_quad_order(const std::optional<int>& from_file);

struct MlArgs {
  double alpha = 1.0;
  std::optional<double> beta;
  double z = 0.0;
  SeriesControl ctl;
};

struct ApproxArgs {
  double alpha = 0.5;
  double eps = 1e-6;
  std::optional<std::pair<std::int64_t, std::int64_t>> check;
  std::int64_t cap = kDefaultOddSearchCap;
};

struct SolveArgs {
  std::filesystem::path problem;
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> plot;
  double odd_eps = 1e-4;
};

int cmd_ml(const MlArgs& args, std::ostream& out, std::ostream& err);
int cmd_approx(const ApproxArgs& args, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(Suite suite, const VerifyOptions& opt, std::ostream& out, std::ostream& err);

/// Odd fraction used for the exponential column of a problem.
OddFraction odd_fraction_for(const ProblemFile& pf, double odd_eps);

/// Samples the solved problem on its grid in both forms.
SampleSeries sample_solution(const ProblemFile& pf, const CauchySolution& sol,
                             const OddFraction& frac, int quad_order);

}  // namespace fraccauchy::cli
