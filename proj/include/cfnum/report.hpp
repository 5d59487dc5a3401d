#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cfnum/identities.hpp"
#include "cfnum/lower_triangular.hpp"
#include "cfnum/rational.hpp"

namespace cfnum {

inline constexpr const char* kSuiteVersion = "1.0.0";

/// orthogonality, inverse_relations, closed_forms, recurrences, sum_rule, routes, quadruple_sums.
const std::vector<std::string>& check_ids();

/// "all", "none" (or empty), or a comma-separated list of check ids.
std::vector<std::string> parse_suite_filter(std::string_view text);

struct SuiteOptions {
  std::vector<std::string> checks;
  int n_max = 8;
  std::uint64_t seed = 42;
  int jobs = 1;
  int trials = 100;
};

struct SuiteReport {
  SuiteOptions options;
  Params params;
  std::vector<Rational> extra_lambdas;
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
};

/// Runs the selected checks over the whole catalog, once with the default
/// parameters and once more with lambda = 1 for the lambda-dependent entries.
SuiteReport run_suite(const SuiteOptions& options);

std::string report_json(const SuiteReport& report);

std::string triangle_json(const std::string& family, const Params& params, const LowerTriangular& t);
std::string assoc_json(const std::string& kind, const std::string& sequence, const std::string& route,
                       const Params& params, const LowerTriangular& t);
/// Header "n,k,value"; values quoted.
std::string triangle_csv(const LowerTriangular& t);

}  // namespace cfnum
