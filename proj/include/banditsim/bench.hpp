#pragma once

#include <vector>

#include "banditsim/policies.hpp"

namespace banditsim {

struct BenchResult {
  PolicyKind policy;
  int num_arms;
  double ms_per_decision;  // median over repetitions
};

// Times action selection plus the learning update in a tight loop with the
// outcome pinned to 1 on every trial (no environment in the loop), and
// reports the median per-decision latency over `repetitions` timed loops.
std::vector<BenchResult> run_bench(const std::vector<PolicyKind>& policies,
                                   const std::vector<int>& arm_counts, long long horizon,
                                   int repetitions, std::uint64_t seed);

}  // namespace banditsim
