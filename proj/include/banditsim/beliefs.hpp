#pragma once

#include <vector>

#include "banditsim/rng.hpp"

namespace banditsim {

// Per-arm Beta beliefs updated by the surprise-modulated variational rule.
// With change_prob = 0 the update reduces to exact conjugate counting.
struct BeliefState {
  std::vector<double> alpha;
  std::vector<double> beta;
  double alpha0 = 1.0;  // reset prior
  double beta0 = 1.0;
  double change_prob = 0.0;            // rho, known to the agent
  double last_change_posterior = 0.0;  // gamma from the most recent update
};

struct PosteriorStats {
  double mean;           // mu = alpha / (alpha + beta)
  double concentration;  // nu = alpha + beta
};

BeliefState init_beliefs(int num_arms, double change_prob);

PosteriorStats posterior_stats(const BeliefState& b, int arm);

// Change-adjusted predictive mean: mu + rho * (prior_mean - mu).
double predictive_mean(const BeliefState& b, int arm);

// Likelihood ratio of the outcome under "the configuration just reset"
// versus "nothing changed".
double bayes_factor_surprise(const BeliefState& b, int arm, int outcome);

// gamma = m*S / (1 + m*S) with m = rho / (1 - rho); the exact posterior
// probability that a change occurred given the outcome.
double change_posterior(double surprise, double change_prob);

// Core recursion with an explicit change posterior (exposed for tests):
// every arm decays toward the reset prior by gamma, then the chosen arm
// absorbs the observation.
void smile_apply(BeliefState& b, int arm, int outcome, double gamma);

// Full update: compute surprise and gamma from the chosen arm's outcome,
// then apply the decay-and-count recursion.
void smile_update(BeliefState& b, int arm, int outcome);

struct CollapsedPrior {
  double alpha;
  double beta;
};

// Moment-matched single-Beta stand-in for the two-component predictive
// prior: (1-rho)*posterior + rho*reset.
CollapsedPrior collapsed_prior(const BeliefState& b, int arm);

}  // namespace banditsim
