#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace fraccauchy::cli;

  CLI::App app{"Mittag-Leffler functions and fractional Cauchy problems"};
  app.require_subcommand(1);

  MlArgs ml;
  double beta = 0.0;
  auto* ml_cmd = app.add_subcommand("ml", "Evaluate E_alpha(z) or E_{alpha,beta}(z) by series");
  ml_cmd->add_option("--alpha", ml.alpha, "order alpha > 0")->required();
  auto* beta_opt = ml_cmd->add_option("--beta", beta, "second parameter beta > 0");
  ml_cmd->add_option("--z", ml.z, "argument")->required();
  ml_cmd->add_option("--max-terms", ml.ctl.max_terms, "series term cap")->capture_default_str();
  ml_cmd->add_option("--tail-tol", ml.ctl.tail_tol, "absolute tail tolerance")->capture_default_str();

  ApproxArgs approx;
  std::vector<std::int64_t> check;
  auto* approx_cmd = app.add_subcommand("approx", "Odd fraction (2m+1)/(2n+1) within eps of alpha");
  approx_cmd->add_option("--alpha", approx.alpha, "target in (0, 1)")->required();
  approx_cmd->add_option("--eps", approx.eps, "tolerance")->required();
  approx_cmd->add_option("--check", check, "verify a given pair: --check M N")->expected(2);
  approx_cmd->add_option("--cap", approx.cap, "largest n searched")->capture_default_str();

  SolveArgs solve;
  std::string csv_path, plot_path;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the Cauchy problem in a JSON problem file");
  solve_cmd->add_option("problem", solve.problem, "problem file")->required()->check(CLI::ExistingFile);
  auto* out_opt = solve_cmd->add_option("--out", csv_path, "CSV output path (stdout if omitted)");
  auto* plot_opt = solve_cmd->add_option("--plot", plot_path, "gnuplot script output path");
  solve_cmd->add_option("--odd-eps", solve.odd_eps, "tolerance when converting a real alpha to m, n")
      ->capture_default_str();

  std::string suite = "series-vs-exp";
  std::int64_t pair_m = 0, pair_n = 0;
  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a built-in verification suite");
  verify_cmd->add_option("--suite", suite, "series-vs-exp | eigen | classical-limit | decay")
      ->check(CLI::IsMember({"series-vs-exp", "eigen", "classical-limit", "decay"}))
      ->capture_default_str();
  auto* m_opt = verify_cmd->add_option("--m", pair_m, "eigen: restrict the odd-order check to this m");
  auto* n_opt = verify_cmd->add_option("--n", pair_n, "eigen: restrict the odd-order check to this n");
  m_opt->needs(n_opt);
  n_opt->needs(m_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*ml_cmd) {
      if (*beta_opt) ml.beta = beta;
      return cmd_ml(ml, std::cout, std::cerr);
    }
    if (*approx_cmd) {
      if (!check.empty()) approx.check = std::make_pair(check[0], check[1]);
      return cmd_approx(approx, std::cout, std::cerr);
    }
    if (*solve_cmd) {
      if (*out_opt) solve.csv = csv_path;
      if (*plot_opt) solve.plot = plot_path;
      return cmd_solve(solve, std::cout, std::cerr);
    }
    if (*verify_cmd) {
      if (*m_opt) verify.odd_pair = std::make_pair(pair_m, pair_n);
      verify.quad_order = resolve_quad_order(std::nullopt);
      return cmd_verify(*parse_suite(suite), verify, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitFailure;
}
