// Runs the acceptance matrix and prints one PASS/FAIL line per criterion.
// Usage: lensball_acceptance [--config file.json] [criterion ids...]
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lensball/acceptance.hpp"

int main(int argc, char** argv) {
  lensball::SuiteConfig cfg;
  std::vector<int> ids;
  try {
    for (int i = 1; i < argc; ++i) {
      if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) {
        std::ifstream in(argv[++i]);
        cfg = lensball::SuiteConfig::from_json(nlohmann::json::parse(in));
      } else {
        ids.push_back(std::stoi(argv[i]));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "usage: lensball_acceptance [--config file.json] [ids...]: " << e.what() << "\n";
    return 2;
  }
  int failed = 0;
  if (ids.empty())
    for (int i = 1; i <= lensball::kCriterionCount; ++i) ids.push_back(i);
  for (int id : ids) {
    const lensball::CriterionResult r = lensball::run_criterion(cfg, id);
    std::cout << r.line() << std::endl;
    failed += !r.pass();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
