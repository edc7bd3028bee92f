#pragma once

#include <vector>

#include "banditsim/rng.hpp"

namespace banditsim {

enum class EnvMode { stationary, switching_fixed, switching_resample };

struct EnvConfig {
  int num_arms = 10;         // K
  double epsilon = 0.1;      // advantage of the best arm; unused in switching_resample
  double switch_prob = 0.0;  // per-trial probability that the configuration resets
  EnvMode mode = EnvMode::stationary;
  double base_p = 0.5;       // reward probability of every non-best arm
};

struct EnvState {
  EnvConfig config;
  std::vector<double> reward_probs;
  int best_arm = 0;
  long long completed_trials = 0;
};

struct StepInfo {
  int outcome = 0;
  double chosen_reward_prob = 0.0;  // after any switch on this trial
  double best_reward_prob = 0.0;
  bool switched = false;
};

// One best arm at base_p + epsilon, everything else at base_p.
EnvState init_stationary(int num_arms, double epsilon, RngStream& rng);

// switching_fixed keeps the stationary reward structure and relocates the
// best arm on a switch; switching_resample redraws every reward
// probability from Uniform(0, 1) on a switch (and at init).
EnvState init_switching(int num_arms, double epsilon, double switch_prob, EnvMode mode,
                        RngStream& rng);

// Plays one trial: from the second trial on, first samples the switch
// indicator (consuming a fixed draw budget whether or not a switch
// happens), then the outcome for the chosen arm. Reported probabilities
// are post-switch.
StepInfo env_step(EnvState& state, int action, RngStream& rng);

// Applies the switch transition unconditionally; test hook for the
// relocation and resample distributions. Invalid on stationary envs.
void force_switch(EnvState& state, RngStream& rng);

}  // namespace banditsim
