#include "cli/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fraccauchy/cauchy.hpp"
#include "fraccauchy/exprepr.hpp"
#include "fraccauchy/ml.hpp"
#include "fraccauchy/oddfrac.hpp"

namespace fraccauchy::cli {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// Problems shared by the classical-limit and decay suites.
struct NamedProblem {
  const char* name;
  CauchyProblem problem;
};

std::vector<NamedProblem> limit_problems() {
  return {{"p=1 a=[1] beta=[1] x0=1", {1.0, {1.0}, {1.0}, 1.0}},
          {"p=2 a=[3,2] beta=[1,0] x0=1", {1.0, {3.0, 2.0}, {1.0, 0.0}, 1.0}}};
}

VerifyReport series_vs_exp(const VerifyOptions& opt) {
  VerifyReport rep{Suite::series_vs_exp, {}};
  for (int n : {1, 2}) {
    for (double rho : {-1.5, -1.0, -0.5, 0.5, 1.0}) {
      for (double x : {0.25, 0.5, 1.0, 2.0}) {
        const double series = eval_h_series({1.0 / (2 * n + 1), rho}, x).value;
        const double expo = eval_h_exp({n, rho}, x, opt.quad_order);
        const double rel = std::fabs(expo - series) / std::max(1.0, std::fabs(series));
        rep.cases.push_back({fmt("n=%g rho=%g x=%g", n, rho, x), rel, 1e-6, rel <= 1e-6});
      }
    }
  }
  return rep;
}

VerifyReport eigen(const VerifyOptions& opt) {
  VerifyReport rep{Suite::eigen, {}};
  if (!opt.odd_pair) {
    constexpr int kTerms = 60;
    for (double alpha : {1.0 / 3.0, 3.0 / 5.0, 9.0 / 11.0}) {
      for (double lambda : {-2.0, -1.0, 0.5, 1.0}) {
        for (double x : {0.1, 0.5, 1.0, 2.0, 3.0}) {
          const HParams p{alpha, lambda};
          const double lhs = frac_deriv_h_truncated(p, x, kTerms);
          const double rhs = lambda * h_series_partial(p, x, kTerms - 1);
          const double bound = 1e-12 * std::max(1.0, std::fabs(rhs));
          const double diff = std::fabs(lhs - rhs);
          rep.cases.push_back(
              {fmt("D^a h: alpha=%.6g lambda=%g x=%g", alpha, lambda, x), diff, bound, diff <= bound});
        }
      }
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  if (opt.odd_pair) {
    pairs.push_back(*opt.odd_pair);
  } else {
    pairs = {{0, 0}, {0, 1}, {0, 2}, {1, 2}};
  }
  for (const auto& [m, n] : pairs) {
    for (double lambda : {-2.0, -1.0, 1.0}) {
      for (double x : {0.5, 1.0, 1.5}) {
        const auto r = check_odd_order_eigen(m, n, lambda, x, 60);
        const double bound = 1e-8 * std::max(1.0, std::fabs(r.rhs));
        char label[120];
        std::snprintf(label, sizeof label, "odd-order: m=%lld n=%lld lambda=%g x=%g",
                      static_cast<long long>(m), static_cast<long long>(n), lambda, x);
        rep.cases.push_back({label, r.discrepancy, bound, r.discrepancy <= bound});
      }
    }
  }
  return rep;
}

double sup_distance_to_classical(const CauchyProblem& base, double alpha) {
  CauchyProblem frac = base;
  frac.alpha = alpha;
  CauchyProblem classical = base;
  classical.alpha = 1.0;
  const auto ys = solve(frac);
  const auto yc = solve(classical);
  double sup = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double x = base.x0 + 2.0 * i / 40.0;
    double closed = 0.0;
    for (std::size_t k = 0; k < yc.roots.size(); ++k) closed += yc.c[k] * std::exp(yc.roots[k] * x);
    sup = std::max(sup, std::fabs(eval_solution_series(ys, x) - closed));
  }
  return sup;
}

VerifyReport classical_limit(const VerifyOptions&) {
  VerifyReport rep{Suite::classical_limit, {}};
  for (const auto& [name, prob] : limit_problems()) {
    double previous = INFINITY;
    for (int j : {1, 2, 4, 10}) {
      const double alpha = static_cast<double>(2 * j + 1) / (2 * j + 3);
      const double sup = sup_distance_to_classical(prob, alpha);
      rep.cases.push_back({std::string(name) + fmt(" j=%g alpha=%.6g", j, alpha), sup, previous,
                           sup < previous});
      previous = sup;
    }
  }
  return rep;
}

VerifyReport decay(const VerifyOptions& opt) {
  VerifyReport rep{Suite::decay, {}};
  struct DecayCase {
    const char* name;
    CauchyProblem problem;
    OddFraction frac;
  };
  const std::vector<DecayCase> cases = {
      {"p=1 alpha=1 a=[1]", {1.0, {1.0}, {1.0}, 1.0}, {0, 0, 0.0}},
      {"p=1 alpha=1/3 a=[1]", {1.0 / 3.0, {1.0}, {1.0}, 0.5}, {0, 1, 0.0}},
      {"p=2 alpha=1 a=[3,2]", {1.0, {3.0, 2.0}, {1.0, 0.0}, 1.0}, {0, 0, 0.0}},
      {"p=2 alpha=3/5 a=[3,2]", {0.6, {3.0, 2.0}, {1.0, 0.0}, 1.0}, {1, 2, 0.0}},
  };
  for (const auto& c : cases) {
    const auto sol = solve(c.problem);
    const double near = eval_solution_exp(sol, c.frac, c.problem.x0 + 1.0, opt.quad_order);
    const double far = eval_solution_exp(sol, c.frac, c.problem.x0 + 20.0, opt.quad_order);
    const double ratio = std::fabs(far) / std::fabs(near);
    rep.cases.push_back({std::string(c.name) + " |y(x0+20)|/|y(x0+1)|", ratio, 1e-3, ratio <= 1e-3});
  }
  return rep;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "series-vs-exp") return Suite::series_vs_exp;
  if (name == "eigen") return Suite::eigen;
  if (name == "classical-limit") return Suite::classical_limit;
  if (name == "decay") return Suite::decay;
  return std::nullopt;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::series_vs_exp: return "series-vs-exp";
    case Suite::eigen: return "eigen";
    case Suite::classical_limit: return "classical-limit";
    case Suite::decay: return "decay";
  }
  return "?";
}

bool VerifyReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.pass; });
}

VerifyReport run_suite(Suite suite, const VerifyOptions& opt) {
  switch (suite) {
    case Suite::series_vs_exp: return series_vs_exp(opt);
    case Suite::eigen: return eigen(opt);
    case Suite::classical_limit: return classical_limit(opt);
    case Suite::decay: return decay(opt);
  }
  return {};
}

}  // namespace fraccauchy::cli
