// Verification reports: named checks with expected and computed values.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lensball {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  double runtime_ms = 0;

  bool pass() const;
  /// Records a check that passes when the two strings are equal.
  bool expect_eq(const std::string& name, const std::string& expected, const std::string& computed);
  bool expect_true(const std::string& name, bool ok, const std::string& detail = {});
  /// Records a failed check for an exception thrown while running `name`.
  void fail(const std::string& name, const std::string& error);
  /// Appends the checks of another report, prefixing their names.
  void merge(const VerificationReport& other, const std::string& prefix);

  /// Stable key order. runtime_ms is included only when asked for, so that
  /// the default output depends on the inputs alone.
  nlohmann::ordered_json to_json(bool with_runtime = false) const;
};

}  // namespace lensball
