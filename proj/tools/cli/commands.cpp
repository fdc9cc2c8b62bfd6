#include "cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include "fraccauchy/cauchy.hpp"
#include "fraccauchy/error.hpp"

namespace fraccauchy::cli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const ComplexRootsUnsupported*>(&e)) return kExitComplexRoots;
  if (dynamic_cast<const RepeatedRoots*>(&e)) return kExitRepeatedRoots;
  if (dynamic_cast<const SingularSystem*>(&e)) return kExitRepeatedRoots;
  if (dynamic_cast<const NonConvergence*>(&e) || dynamic_cast<const NoConvergence*>(&e) ||
      dynamic_cast<const ConvergenceError*>(&e) || dynamic_cast<const SearchExhausted*>(&e)) {
    return kExitConvergence;
  }
  if (dynamic_cast<const std::ios_base::failure*>(&e)) return kExitParse;
  return kExitFailure;
}

int resolve_quad_order(const std::optional<int>& from_file) {
  if (from_file) return *from_file;
  if (const char* env = std::getenv(kQuadOrderEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 100000) {
      throw ParseError(std::string(kQuadOrderEnv) + " must be a positive integer, got '" + env + "'");
    }
    return static_cast<int>(v);
  }
  return kDefaultQuadOrder;
}

int cmd_ml(const MlArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto r = args.beta ? eval_E2(args.alpha, *args.beta, args.z, args.ctl)
                             : eval_E(args.alpha, args.z, args.ctl);
    out << format_number(r.value) << '\n';
    out << "terms=" << r.terms << " stop=" << to_string(r.stop)
        << " last_term=" << format_number(r.last_term) << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "ml: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_approx(const ApproxArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.check) {
      const auto f = make_odd_fraction(args.alpha, args.check->first, args.check->second);
      const bool ok = f.err < args.eps;
      out << "m=" << f.m << " n=" << f.n << " value=" << format_number(value(f))
          << " err=" << format_number(f.err) << (ok ? " < " : " >= ") << "eps="
          << format_number(args.eps) << '\n';
      out << (ok ? "certificate accepted" : "certificate rejected") << '\n';
      return ok ? kExitOk : kExitVerification;
    }
    const auto f = approximate(args.alpha, args.eps, args.cap);
    out << "m=" << f.m << " n=" << f.n << " err=" << format_number(f.err) << '\n';
    out << "value=" << format_number(value(f)) << " (" << f.numerator() << "/" << f.denominator()
        << ")\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "approx: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

OddFraction odd_fraction_for(const ProblemFile& pf, double odd_eps) {
  if (pf.odd) return make_odd_fraction(pf.alpha, pf.odd->m, pf.odd->n);
  if (pf.alpha == 1.0) return make_odd_fraction(1.0, 0, 0);
  return approximate(pf.alpha, odd_eps);
}

SampleSeries sample_solution(const ProblemFile& pf, const CauchySolution& sol,
                             const OddFraction& frac, int quad_order) {
  SampleSeries rows;
  for (double x : pf.grid.points()) {
    SampleRow row;
    row.x = x;
    row.y_series = eval_solution_series(sol, x, pf.series);
    row.y_exp = eval_solution_exp(sol, frac, x, quad_order);
    row.abs_diff = std::fabs(row.y_series - row.y_exp);
    rows.push_back(row);
  }
  return rows;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.plot && !args.csv) throw ParseError("--plot needs --out (the script reads the CSV)");
    const auto pf = load_problem_file(args.problem);
    const int quad_order = resolve_quad_order(pf.quadrature_order);
    const auto frac = odd_fraction_for(pf, args.odd_eps);

    SolverOptions opt;
    opt.series = pf.series;
    const auto sol = solve(pf.problem(), opt);
    const auto residuals = verify_initial_conditions(sol, pf.series);
    const auto rows = sample_solution(pf, sol, frac, quad_order);

    // The report goes to stderr when the CSV itself is written to stdout.
    std::ostream& report = args.csv ? out : err;
    report << "alpha=" << format_number(pf.alpha) << " odd_fraction: m=" << frac.m
           << " n=" << frac.n << " err=" << format_number(frac.err) << '\n';
    report << "roots:";
    for (double r : sol.roots) report << ' ' << format_number(r);
    report << "\ncoefficients:";
    for (double c : sol.c) report << ' ' << format_number(c);
    report << "\ninitial-condition residuals:";
    for (double r : residuals.residuals) report << ' ' << format_number(r);
    report << "\nmax scaled residual: " << format_number(residuals.max_scaled) << '\n';
    report << "quadrature order: " << quad_order << '\n';

    if (args.csv) {
      std::ofstream csv(*args.csv, std::ios::binary);
      if (!csv) throw ParseError("cannot write " + args.csv->string());
      write_csv(csv, rows);
      report << "wrote " << rows.size() << " rows to " << args.csv->string() << '\n';
    } else {
      write_csv(out, rows);
    }
    if (args.plot) {
      std::ofstream script(*args.plot, std::ios::binary);
      if (!script) throw ParseError("cannot write " + args.plot->string());
      write_plot_script(script, args.csv->string(),
                        "fractional Cauchy problem, alpha = " + format_number(pf.alpha));
      report << "wrote plot script " << args.plot->string() << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

int cmd_verify(Suite suite, const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const auto rep = run_suite(suite, opt);
    for (const auto& c : rep.cases) {
      out << (c.pass ? "PASS " : "FAIL ") << c.label << "  value=" << format_number(c.value)
          << " bound=" << format_number(c.bound) << '\n';
    }
    const bool ok = rep.pass();
    out << suite_name(suite) << ": " << (ok ? "PASS" : "FAIL") << " (" << rep.cases.size()
        << " cases)\n";
    return ok ? kExitOk : kExitVerification;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace fraccauchy::cli
