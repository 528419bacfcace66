#include "lensball/report.hpp"

namespace lensball {

bool VerificationReport::pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool VerificationReport::expect_eq(const std::string& name, const std::string& expected,
                                   const std::string& computed) {
  checks.push_back({name, expected, computed, expected == computed});
  return checks.back().pass;
}

bool VerificationReport::expect_true(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back({name, "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
  return ok;
}

void VerificationReport::fail(const std::string& name, const std::string& error) {
  checks.push_back({name, "no error", "error: " + error, false});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

nlohmann::ordered_json VerificationReport::to_json(bool with_runtime) const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  nlohmann::ordered_json ps = nlohmann::ordered_json::object();
  for (auto& [k, v] : params) ps[k] = v;
  j["params"] = ps;
  j["pass"] = pass();
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json x;
    x["name"] = c.name;
    x["expected"] = c.expected;
    x["computed"] = c.computed;
    x["pass"] = c.pass;
    cs.push_back(x);
  }
  j["checks"] = cs;
  if (with_runtime) j["runtime_ms"] = runtime_ms;
  return j;
}

}  // namespace lensball
