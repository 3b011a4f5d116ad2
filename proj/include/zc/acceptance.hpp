#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  int cases = 0;
  int failures = 0;
  /// Deterministic summary; the first few failures are named here.
  std::string detail;
  double seconds = 0;  // wall time, excluded from reproducibility comparisons
};

/// Property and certificate checks 1-8 of the acceptance suite. Each criterion
/// draws from its own generator seeded by (seed, id). The callback, if any,
/// is invoked after each criterion finishes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& progress = {});

/// Runs a single criterion (1..8). Throws Precondition for other ids.
CriterionResult run_criterion(int id, std::uint64_t seed);

}  // namespace zc
