#include "banditsim/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace banditsim {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(key + " must be an integer, got '" + value + "'");
  }
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(key + " must be a number, got '" + value + "'");
  }
}

std::uint64_t parse_seed(const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("seed must be a non-negative integer, got '" + value + "'");
  }
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool is_provenance_key(const std::string& key) {
  return key == "version" || key == "wall_clock_seconds" || key.rfind("final_", 0) == 0;
}

}  // namespace

std::string policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::aai: return "aai";
    case PolicyKind::gai: return "gai";
    case PolicyKind::bucb: return "bucb";
    case PolicyKind::ots: return "ots";
    case PolicyKind::ts: return "ts";
    case PolicyKind::ucb: return "ucb";
    case PolicyKind::random_choice: return "random";
    case PolicyKind::oracle: return "oracle";
  }
  throw std::logic_error("policy_name: unknown kind");
}

PolicyKind policy_from_name(const std::string& name) {
  if (name == "aai") return PolicyKind::aai;
  if (name == "gai") return PolicyKind::gai;
  if (name == "bucb") return PolicyKind::bucb;
  if (name == "ots") return PolicyKind::ots;
  if (name == "ts") return PolicyKind::ts;
  if (name == "ucb") return PolicyKind::ucb;
  if (name == "random") return PolicyKind::random_choice;
  throw std::invalid_argument("unknown policy '" + name +
                              "' (expected aai, gai, bucb, ots, ts, ucb or random)");
}

std::string env_mode_name(EnvMode mode) {
  switch (mode) {
    case EnvMode::stationary: return "stationary";
    case EnvMode::switching_fixed: return "switching_fixed";
    case EnvMode::switching_resample: return "switching_resample";
  }
  throw std::logic_error("env_mode_name: unknown mode");
}

EnvMode env_mode_from_name(const std::string& name) {
  if (name == "stationary") return EnvMode::stationary;
  if (name == "switching_fixed") return EnvMode::switching_fixed;
  if (name == "switching_resample") return EnvMode::switching_resample;
  throw std::invalid_argument(
      "unknown env '" + name +
      "' (expected stationary, switching_fixed or switching_resample)");
}

std::string granularity_name(RecordGranularity g) {
  return g == RecordGranularity::every_trial ? "every_trial" : "log_spaced";
}

RecordGranularity granularity_from_name(const std::string& name) {
  if (name == "every_trial") return RecordGranularity::every_trial;
  if (name == "log_spaced") return RecordGranularity::log_spaced;
  throw std::invalid_argument("unknown granularity '" + name +
                              "' (expected every_trial or log_spaced)");
}

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(line_no) +
                                                 ": empty key");
    kv[key] = value;
  }
  return kv;
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_kv_text(buffer.str());
}

namespace {

void apply_scalar(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "env") {
    cfg.env.mode = env_mode_from_name(value);
  } else if (key == "K") {
    cfg.env.num_arms = static_cast<int>(parse_int(key, value));
  } else if (key == "eps") {
    cfg.env.epsilon = parse_real(key, value);
  } else if (key == "rho") {
    cfg.env.switch_prob = parse_real(key, value);
  } else if (key == "policy") {
    cfg.policy.kind = policy_from_name(value);
  } else if (key == "lambda") {
    cfg.policy.preference_precision = parse_real(key, value);
  } else if (key == "T") {
    cfg.horizon = parse_int(key, value);
  } else if (key == "N") {
    cfg.ensemble_size = static_cast<int>(parse_int(key, value));
  } else if (key == "seed") {
    cfg.master_seed = parse_seed(value);
  } else if (key == "granularity") {
    cfg.granularity = granularity_from_name(value);
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

}  // namespace

void apply_config_kv(ExperimentConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (is_provenance_key(key)) continue;
    apply_scalar(cfg, key, value);
  }
}

void apply_sweep_kv(ExperimentConfig& base, SweepGrid& grid,
                    const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (is_provenance_key(key)) continue;
    const std::vector<std::string> items = split_list(value);
    if (items.empty()) throw std::invalid_argument("config key '" + key + "' has an empty value");
    if (key == "K") {
      grid.arm_counts.clear();
      for (const auto& it : items) grid.arm_counts.push_back(static_cast<int>(parse_int(key, it)));
    } else if (key == "eps") {
      grid.epsilons.clear();
      for (const auto& it : items) grid.epsilons.push_back(parse_real(key, it));
    } else if (key == "rho") {
      grid.switch_probs.clear();
      for (const auto& it : items) grid.switch_probs.push_back(parse_real(key, it));
    } else if (key == "lambda") {
      grid.precisions.clear();
      for (const auto& it : items) grid.precisions.push_back(parse_real(key, it));
    } else if (key == "policy") {
      grid.policies.clear();
      for (const auto& it : items) grid.policies.push_back(policy_from_name(it));
    } else if (key == "T") {
      grid.horizons.clear();
      for (const auto& it : items) grid.horizons.push_back(parse_int(key, it));
    } else {
      if (items.size() != 1)
        throw std::invalid_argument("config key '" + key + "' cannot be swept");
      apply_scalar(base, key, items[0]);
    }
  }
}

std::vector<std::pair<std::string, std::string>> config_kv(const ExperimentConfig& cfg) {
  return {
      {"env", env_mode_name(cfg.env.mode)},
      {"K", std::to_string(cfg.env.num_arms)},
      {"eps", format_real(cfg.env.epsilon)},
      {"rho", format_real(cfg.env.switch_prob)},
      {"policy", policy_name(cfg.policy.kind)},
      {"lambda", format_real(cfg.policy.preference_precision)},
      {"T", std::to_string(cfg.horizon)},
      {"N", std::to_string(cfg.ensemble_size)},
      {"seed", std::to_string(cfg.master_seed)},
      {"granularity", granularity_name(cfg.granularity)},
  };
}

}  // namespace banditsim
