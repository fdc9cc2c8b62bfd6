#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fraccauchy/quad.hpp"

namespace fraccauchy::cli {

enum class Suite { series_vs_exp, eigen, classical_limit, decay };

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite suite);

struct VerifyOptions {
  // Restricts the odd-order part of the eigen suite to one (m, n) pair.
  std::optional<std::pair<std::int64_t, std::int64_t>> odd_pair;
  int quad_order = kDefaultQuadOrder;
};

struct VerifyCase {
  std::string label;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct VerifyReport {
  Suite suite = Suite::series_vs_exp;
  std::vector<VerifyCase> cases;

  bool pass() const;
};

VerifyReport run_suite(Suite suite, const VerifyOptions& opt = {});

}  // namespace fraccauchy::cli
