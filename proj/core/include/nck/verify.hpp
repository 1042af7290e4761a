#pragma once

// Named invariant suites: brute-force cross-checks of the library against
// independent recomputations. Shared by the command line and the acceptance
// runner.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nck {

struct SuiteInfo {
  std::string name;
  std::string description;
  int default_n;
  int max_n;  // cost guard
};

struct SuiteReport {
  std::string name;
  int n = 0;
  long checks = 0;
  long failed = 0;
  std::vector<std::string> counterexamples;  // the first few failures

  bool passed() const { return failed == 0 && checks > 0; }
};

const std::vector<SuiteInfo>& verify_suites();
const SuiteInfo& suite_info(std::string_view name);  // throws std::invalid_argument

// Runs a suite up to size n (the default when absent). Throws
// std::invalid_argument for an unknown name and std::length_error above the
// cost guard, which is the suite's max_n unless overridden.
SuiteReport run_suite(std::string_view name, std::optional<int> n = std::nullopt,
                      std::optional<int> max_n = std::nullopt);

}  // namespace nck
