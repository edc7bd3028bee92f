#pragma once

#include <cstdint>
#include <vector>

#include "banditsim/env.hpp"
#include "banditsim/policies.hpp"

namespace banditsim {

enum class RecordGranularity { every_trial, log_spaced };

struct ExperimentConfig {
  EnvConfig env;
  PolicySpec policy;
  long long horizon = 10000;  // T
  int ensemble_size = 1000;   // N
  std::uint64_t master_seed = 0;
  RecordGranularity granularity = RecordGranularity::log_spaced;
};

// Throws with a one-line message on the first violated precondition.
void validate_config(const ExperimentConfig& cfg);

struct RunTrace {
  std::vector<int> actions;
  std::vector<std::uint8_t> outcomes;
  std::vector<double> best_probs;
  std::vector<double> chosen_probs;
  std::vector<double> regret_increments;
  std::vector<std::uint8_t> switched;
};

// Powers of two up to the horizon plus the horizon itself, or every trial.
std::vector<long long> checkpoint_trials(long long horizon, RecordGranularity granularity);

// One seeded episode. Bit-identical across reruns of the same
// (master_seed, run_index); env and agent consume separate streams.
RunTrace run_episode(const ExperimentConfig& cfg, int run_index);

struct EnsembleSummary {
  ExperimentConfig config;
  std::vector<long long> checkpoints;
  std::vector<double> mean_regret_rate;
  std::vector<double> rate_ci_low;
  std::vector<double> rate_ci_high;
  std::vector<double> mean_cum_regret;
  std::vector<double> cum_ci_low;
  std::vector<double> cum_ci_high;
  std::vector<double> final_regret_per_run;
  bool degenerate_ci = false;  // N == 1: means only, CI columns undefined
};

// Runs N independent episodes (run_index 0..N-1) and aggregates mean and
// 95% CI at the checkpoints. Aggregation happens serially in run-index
// order after all workers finish, so the summary does not depend on the
// worker count. workers = 0 picks the hardware concurrency.
EnsembleSummary run_ensemble(const ExperimentConfig& cfg, unsigned workers = 0);

// Cartesian-product sweep. Every dimension must be non-empty; unswept
// dimensions are singletons taken from the base config.
struct SweepGrid {
  std::vector<int> arm_counts;
  std::vector<double> epsilons;
  std::vector<double> switch_probs;
  std::vector<double> precisions;  // lambda
  std::vector<PolicyKind> policies;
  std::vector<long long> horizons;
};

SweepGrid singleton_grid(const ExperimentConfig& base);
std::size_t grid_size(const SweepGrid& grid);

// Independent per-cell seed: cells of one sweep never share streams.
std::uint64_t sweep_cell_seed(std::uint64_t master_seed, std::size_t cell_index);

// Materializes the cell config at a row-major index over
// (K, epsilon, rho, lambda, policy, T), with the cell seed applied.
ExperimentConfig sweep_cell_config(const ExperimentConfig& base, const SweepGrid& grid,
                                   std::size_t cell_index);

std::vector<EnsembleSummary> run_sweep(const ExperimentConfig& base, const SweepGrid& grid,
                                       unsigned workers = 0);

}  // namespace banditsim
