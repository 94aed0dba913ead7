#pragma once

// The reproducibility suite: eight numbered checks shared by the acceptance
// test binary and the `verify-all` command.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pretzel {

struct AcceptanceConfig {
  int s_min = 3;
  int s_max = 12;  // s_max < s_min means an empty range: nothing runs
  std::uint64_t seed = 20260516;
  std::size_t soundness_instances = 10000;
  std::size_t mutations = 1000;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Criteria with their own s window (4, 5, 6) use its intersection with the
/// configured range; 7 and 8 do not depend on it.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);
CriterionResult run_criterion(int id, const AcceptanceConfig& cfg);

/// The expected Slope List entry: empty for "not admissible".
std::optional<std::int64_t> expected_slope(int s, int row, bool type3);

nlohmann::json to_json(const CriterionResult& r);

}  // namespace pretzel
