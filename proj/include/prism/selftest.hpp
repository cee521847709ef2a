#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace prism {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long checks = 0;
  std::vector<std::string> failures;  // first few failure messages
};

struct SelfTestOptions {
  int n_max = 20;
  // Replacement phi used by the bounds suite; empty means the real table.
  std::function<int(int, int)> phi_override;
};

/// Runs the invariant suites (prism_core, bounds, labeler, verifier, exact)
/// for n up to n_max. The exact suite cross-checks the search against the
/// formula for n in {3, 4, 5} where n <= n_max.
std::vector<SuiteResult> run_selftest(const SelfTestOptions& options);

}  // namespace prism
