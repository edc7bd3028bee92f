#pragma once

#include <map>
#include <string>
#include <vector>

#include "banditsim/sim.hpp"

namespace banditsim {

inline constexpr const char* kVersion = "0.1.0";

std::string policy_name(PolicyKind kind);
PolicyKind policy_from_name(const std::string& name);
std::string env_mode_name(EnvMode mode);
EnvMode env_mode_from_name(const std::string& name);
std::string granularity_name(RecordGranularity g);
RecordGranularity granularity_from_name(const std::string& name);

// Flat key=value file: one pair per line, '#' comments, blank lines
// ignored. Later occurrences of a key win.
std::map<std::string, std::string> parse_kv_file(const std::string& path);
std::map<std::string, std::string> parse_kv_text(const std::string& text);

// Applies recognized scalar keys (env, K, eps, rho, policy, lambda, T, N,
// seed, granularity) onto a config. Provenance keys emitted by the
// summary writer are accepted and skipped, so a summary file round-trips
// as a config file. Unknown keys are an error.
void apply_config_kv(ExperimentConfig& cfg, const std::map<std::string, std::string>& kv);

// Same key set, but comma lists are allowed on the sweepable parameters
// (K, eps, rho, lambda, policy, T); scalars land in the base config.
void apply_sweep_kv(ExperimentConfig& base, SweepGrid& grid,
                    const std::map<std::string, std::string>& kv);

// Serialized provenance block: the exact key=value lines that reproduce
// this config when parsed back.
std::vector<std::pair<std::string, std::string>> config_kv(const ExperimentConfig& cfg);

}  // namespace banditsim
