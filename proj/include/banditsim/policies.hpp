#pragma once

#include <vector>

#include "banditsim/beliefs.hpp"
#include "banditsim/rng.hpp"

namespace banditsim {

enum class PolicyKind { aai, gai, bucb, ots, ts, ucb, random_choice, oracle };

struct PolicySpec {
  PolicyKind kind = PolicyKind::aai;
  double preference_precision = 0.1;  // lambda; used by aai/gai only
};

// Approximate expected-free-energy rule: score_k = 2*lambda*mu + 1/(2*nu),
// selected by argmax.
std::vector<double> aai_scores(const BeliefState& b, double lambda);

// Exact expected free energy of one arm (action-independent constants
// dropped), selected by argmin.
double expected_free_energy(const BeliefState& b, double lambda, int arm);
std::vector<double> efe_scores(const BeliefState& b, double lambda);

// Split form assembled from the definition: KL(predicted || preferred)
// plus expected outcome entropy. Kept as an independent route so the
// closed form above can be cross-checked term by term.
double efe_risk(const BeliefState& b, double lambda, int arm);
double efe_ambiguity(const BeliefState& b, int arm);

// Quantile index: the z_t = 1 - 1/t percentile of the collapsed-prior
// Beta beliefs, z clamped to [0, 1 - 1e-12].
std::vector<double> bucb_indices(const BeliefState& b, long long trial);

// Posterior draws, optionally floored at the change-adjusted predictive
// mean (the optimistic variant). Arms are sampled in order 0..K-1.
std::vector<double> ts_indices(const BeliefState& b, RngStream& rng);
std::vector<double> ots_indices(const BeliefState& b, RngStream& rng);

// Frequentist bookkeeping for the classical UCB baseline.
struct FrequentistState {
  std::vector<long long> pull_counts;
  std::vector<double> mean_rewards;
  long long trial = 1;  // 1-based index of the trial being decided
};

FrequentistState init_frequentist(int num_arms);
void frequentist_update(FrequentistState& f, int arm, int outcome);

struct UcbDecision {
  int forced_arm = -1;  // >= 0 during the round-robin initialization
  std::vector<double> indices;
};

// Bernoulli-tuned UCB: m + ln(t)/n + sqrt(m ln(t)/n) after each arm has
// been played once; before that, arms are forced in order.
UcbDecision ucb_indices(const FrequentistState& f);

int random_index(int num_arms, RngStream& rng);

enum class SelectMode { max, min };

// Shared argmax/argmin with uniform random tie-breaking. Throws on any
// non-finite score.
int select_action(const std::vector<double>& scores, RngStream& rng, SelectMode mode);

}  // namespace banditsim
