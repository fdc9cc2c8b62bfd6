#include "cli/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fraccauchy::cli {

namespace {

const nlohmann::json& require(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("problem file: missing field '") + key + "'");
  }
  return obj.at(key);
}

double as_number(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError("problem file: '" + what + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError("problem file: '" + what + "' must be finite");
  return d;
}

std::int64_t as_integer(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError("problem file: '" + what + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<double> as_number_list(const nlohmann::json& v, const std::string& what) {
  if (!v.is_array()) throw ParseError("problem file: '" + what + "' must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_number(v[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> xs(steps);
  const double h = (x_end - x_start) / (steps - 1);
  for (int i = 0; i < steps; ++i) xs[i] = x_start + h * i;
  xs.back() = x_end;
  return xs;
}

ProblemFile parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("problem file: top level must be an object");
  ProblemFile pf;

  const auto& alpha = require(doc, "alpha");
  if (alpha.is_object()) {
    const auto m = as_integer(require(alpha, "m"), "alpha.m");
    const auto n = as_integer(require(alpha, "n"), "alpha.n");
    if (m < 0 || n < 0 || m > n) throw ParseError("problem file: alpha needs 0 <= m <= n");
    pf.odd = OddFraction{m, n, 0.0};
    pf.alpha = value(*pf.odd);
  } else {
    pf.alpha = as_number(alpha, "alpha");
  }
  if (!(pf.alpha > 0.0 && pf.alpha <= 1.0)) throw ParseError("problem file: alpha must lie in (0, 1]");

  pf.a = as_number_list(require(doc, "a"), "a");
  pf.beta = as_number_list(require(doc, "beta"), "beta");
  if (pf.a.empty()) throw ParseError("problem file: 'a' must not be empty");
  if (pf.a.size() != pf.beta.size()) {
    throw ParseError("problem file: 'a' and 'beta' must have the same length");
  }
  pf.x0 = as_number(require(doc, "x0"), "x0");
  if (!(pf.x0 > 0.0)) throw ParseError("problem file: x0 must be > 0");

  const auto& grid = require(doc, "grid");
  pf.grid.x_start = as_number(require(grid, "x_start"), "grid.x_start");
  pf.grid.x_end = as_number(require(grid, "x_end"), "grid.x_end");
  pf.grid.steps = static_cast<int>(as_integer(require(grid, "steps"), "grid.steps"));
  if (pf.grid.x_start < pf.x0) throw ParseError("problem file: grid.x_start must be >= x0");
  if (pf.grid.steps < 2) throw ParseError("problem file: grid.steps must be >= 2");
  if (!(pf.grid.x_end > pf.grid.x_start)) {
    throw ParseError("problem file: grid.x_end must exceed grid.x_start");
  }

  if (doc.contains("quadrature_order")) {
    const auto order = as_integer(doc.at("quadrature_order"), "quadrature_order");
    if (order < 1) throw ParseError("problem file: quadrature_order must be >= 1");
    pf.quadrature_order = static_cast<int>(order);
  }
  if (doc.contains("series")) {
    const auto& s = doc.at("series");
    if (s.contains("max_terms")) {
      pf.series.max_terms = static_cast<int>(as_integer(s.at("max_terms"), "series.max_terms"));
    }
    if (s.contains("tail_tol")) pf.series.tail_tol = as_number(s.at("tail_tol"), "series.tail_tol");
    if (pf.series.max_terms < 1 || !(pf.series.tail_tol > 0.0)) {
      throw ParseError("problem file: series needs max_terms >= 1 and tail_tol > 0");
    }
  }
  return pf;
}

ProblemFile parse_problem_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("problem file: invalid JSON: ") + e.what());
  }
  return parse_problem(doc);
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

}  // namespace fraccauchy::cli
