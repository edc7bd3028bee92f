#include "banditsim/env.hpp"

#include <algorithm>
#include <stdexcept>

namespace banditsim {

namespace {

void check_arms(int num_arms) {
  if (num_arms < 2) throw std::invalid_argument("env: K must be at least 2");
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("epsilon must lie in (0, 0.5)");
}

int argmax_lowest(const std::vector<double>& v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

// Moves the best arm to `hop`-th of the other K-1 arms, keeping the
// one-high-rest-base reward structure.
void relocate_best_arm(EnvState& state, std::uint64_t hop) {
  int target = static_cast<int>(hop);
  if (target >= state.best_arm) ++target;
  state.reward_probs[state.best_arm] = state.config.base_p;
  state.best_arm = target;
  state.reward_probs[target] = state.config.base_p + state.config.epsilon;
}

}  // namespace

EnvState init_stationary(int num_arms, double epsilon, RngStream& rng) {
  check_arms(num_arms);
  check_epsilon(epsilon);
  EnvState state;
  state.config = EnvConfig{num_arms, epsilon, 0.0, EnvMode::stationary, 0.5};
  state.reward_probs.assign(num_arms, state.config.base_p);
  state.best_arm = static_cast<int>(rng.next_below(num_arms));
  state.reward_probs[state.best_arm] = state.config.base_p + epsilon;
  return state;
}

EnvState init_switching(int num_arms, double epsilon, double switch_prob, EnvMode mode,
                        RngStream& rng) {
  check_arms(num_arms);
  if (mode == EnvMode::stationary)
    throw std::invalid_argument("init_switching: use init_stationary for the stationary mode");
  if (!(switch_prob > 0.0 && switch_prob < 1.0))
    throw std::invalid_argument("rho must lie in (0, 1) for switching bandits");

  EnvState state;
  if (mode == EnvMode::switching_fixed) {
    check_epsilon(epsilon);
    state = init_stationary(num_arms, epsilon, rng);
  } else {
    state.reward_probs.resize(num_arms);
    for (double& p : state.reward_probs) p = rng.next_double();
    state.best_arm = argmax_lowest(state.reward_probs);
  }
  state.config = EnvConfig{num_arms, epsilon, switch_prob, mode, 0.5};
  return state;
}

StepInfo env_step(EnvState& state, int action, RngStream& rng) {
  const EnvConfig& cfg = state.config;
  if (action < 0 || action >= cfg.num_arms)
    throw std::out_of_range("env_step: action out of range");

  StepInfo info;
  if (cfg.mode != EnvMode::stationary && state.completed_trials >= 1) {
    const bool switched = sample_bernoulli(rng, cfg.switch_prob) == 1;
    // The switch target (or fresh reward probabilities) is drawn whether or
    // not the switch fires, so the stream position per trial is fixed and
    // the theta trajectory does not depend on the action sequence.
    if (cfg.mode == EnvMode::switching_fixed) {
      const std::uint64_t hop = rng.next_below(static_cast<std::uint64_t>(cfg.num_arms) - 1);
      if (switched) relocate_best_arm(state, hop);
    } else {
      for (int k = 0; k < cfg.num_arms; ++k) {
        const double fresh = rng.next_double();
        if (switched) state.reward_probs[k] = fresh;
      }
      if (switched) state.best_arm = argmax_lowest(state.reward_probs);
    }
    info.switched = switched;
  }

  info.best_reward_prob = state.reward_probs[state.best_arm];
  info.chosen_reward_prob = state.reward_probs[action];
  info.outcome = sample_bernoulli(rng, info.chosen_reward_prob);
  ++state.completed_trials;
  return info;
}

void force_switch(EnvState& state, RngStream& rng) {
  switch (state.config.mode) {
    case EnvMode::switching_fixed:
      relocate_best_arm(state, rng.next_below(static_cast<std::uint64_t>(state.config.num_arms) - 1));
      break;
    case EnvMode::switching_resample:
      for (double& p : state.reward_probs) p = rng.next_double();
      state.best_arm = argmax_lowest(state.reward_probs);
      break;
    case EnvMode::stationary:
      throw std::logic_error("force_switch: stationary env has no switch process");
  }
}

}  // namespace banditsim
