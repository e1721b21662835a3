#pragma once

// Self-check suite behind `hhht verify`: every module invariant re-checked
// against brute-force enumeration or an independent route.

#include <string>
#include <vector>

namespace hhht {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Names of all checks, in run order.
std::vector<std::string> verification_check_names();

/// Runs the checks whose name starts with `filter` (all when empty).
std::vector<CheckResult> run_verification(const std::string& filter = {});

}  // namespace hhht
