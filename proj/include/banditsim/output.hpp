#pragma once

#include <string>

#include "banditsim/sim.hpp"

namespace banditsim {

struct OutputPaths {
  std::string trajectory_csv;
  std::string finals_csv;
  std::string summary;
};

// <prefix>.csv, <prefix>.finals.csv, <prefix>.summary.txt
OutputPaths bundle_paths(const std::string& prefix);

// Checkpoint table, one row per checkpoint, 10 significant digits.
// CI columns are left empty for a degenerate (N = 1) summary.
void write_trajectory_csv(const EnsembleSummary& summary, const std::string& path);

// Per-run final cumulative regrets (histogram feed).
void write_finals_csv(const EnsembleSummary& summary, const std::string& path);

// Provenance block (config echo, seed, version, wall clock) plus the
// final-checkpoint statistics; parseable back into the producing config.
void write_summary(const EnsembleSummary& summary, const std::string& path, double wall_seconds);

// All three files of the bundle.
OutputPaths write_output_bundle(const EnsembleSummary& summary, const std::string& prefix,
                                double wall_seconds);

}  // namespace banditsim
