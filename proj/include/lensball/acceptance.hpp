// The acceptance matrix: ten criteria, each a verification report over a
// parameter range. Shared by `lensball suite` and the acceptance test binary.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lensball/report.hpp"

namespace lensball {

struct SuiteConfig {
  int cf_pmax = 200;
  int wahl_depth = 10;
  int tree_pmax = 100;
  int diagram_coeff_sum = 20;
  int delta_wahl_sum = 18;
  int pps_pmax = 8;
  int kh13_min = 3, kh13_max = 9;
  int psquared_min = 2, psquared_max = 4;
  int fib_nmax = 20;
  std::vector<int> cp2bar_n{1, 2};
  int covers_snf_pmax = 60;
  int covers_ball_pmax = 50;
  std::optional<int> crossing_cap;  // exported as LENSBALL_CAP when set

  /// Unknown keys are rejected; missing keys keep their defaults.
  static SuiteConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  VerificationReport report;

  bool within_budget() const { return seconds <= budget_seconds; }
  bool pass() const { return report.pass() && within_budget(); }
  /// "[PASS] 3 tree coverage (88 checks, 0.12 s, budget 5 s)", or FAIL with
  /// the first failing check.
  std::string line() const;
};

inline constexpr int kCriterionCount = 10;

/// Runs the given criteria (all when empty) in increasing order of id.
/// Instances inside a criterion run in parallel; results keep parameter order.
std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg, std::vector<int> ids = {});

/// One criterion; throws std::out_of_range for an unknown id.
CriterionResult run_criterion(const SuiteConfig& cfg, int id);

}  // namespace lensball
