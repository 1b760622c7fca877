#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adgibbs {

struct BoundCheckResult {
  std::string name;
  bool passed = false;
  long cases = 0;       // number of (model, parameter) cases exercised
  double worst_ratio = 0.0;  // worst observed (exact quantity)/(bound)
  std::string detail;
};

struct BoundReport {
  std::vector<BoundCheckResult> checks;

  bool all_passed() const;
};

/// Property suite pitting the closed-form ergodicity bounds against
/// exact dense-matrix oracles:
///   - kernel Lipschitz bound on 100 random selection-probability pairs
///     (truncated stairway and a 3-coordinate product model),
///   - the mixture decomposition identity to 1e-12,
///   - the strong-uniform minorization upgrade on 20 random reversible
///     chains,
///   - the uniform convergence bound against exact TV decay.
/// With selftest_negate set, one exact row is perturbed so the suite
/// must report a failure (harness self-test).
BoundReport run_bound_suite(std::uint64_t seed, bool selftest_negate = false);

/// Fixed-width pass/fail table.
std::string format_report(const BoundReport& report);

}  // namespace adgibbs
