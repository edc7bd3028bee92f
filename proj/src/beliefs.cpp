#include "banditsim/beliefs.hpp"

#include <stdexcept>

namespace banditsim {

namespace {

void check_arm(const BeliefState& b, int arm) {
  if (arm < 0 || arm >= static_cast<int>(b.alpha.size()))
    throw std::out_of_range("beliefs: arm index out of range");
}

void check_outcome(int outcome) {
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("beliefs: outcome must be 0 or 1");
}

}  // namespace

BeliefState init_beliefs(int num_arms, double change_prob) {
  if (num_arms < 2) throw std::invalid_argument("init_beliefs: K must be at least 2");
  if (!(change_prob >= 0.0 && change_prob < 1.0))
    throw std::invalid_argument("init_beliefs: rho must lie in [0, 1)");
  BeliefState b;
  b.alpha.assign(num_arms, 1.0);
  b.beta.assign(num_arms, 1.0);
  b.change_prob = change_prob;
  return b;
}

PosteriorStats posterior_stats(const BeliefState& b, int arm) {
  check_arm(b, arm);
  const double nu = b.alpha[arm] + b.beta[arm];
  return {b.alpha[arm] / nu, nu};
}

double predictive_mean(const BeliefState& b, int arm) {
  const double mu = posterior_stats(b, arm).mean;
  const double prior_mean = b.alpha0 / (b.alpha0 + b.beta0);
  return mu + b.change_prob * (prior_mean - mu);
}

double bayes_factor_surprise(const BeliefState& b, int arm, int outcome) {
  check_outcome(outcome);
  const double mu = posterior_stats(b, arm).mean;
  const double prior_mean = b.alpha0 / (b.alpha0 + b.beta0);
  const double p_change = outcome == 1 ? prior_mean : 1.0 - prior_mean;
  const double p_stay = outcome == 1 ? mu : 1.0 - mu;
  if (!(p_stay > 0.0))
    throw std::runtime_error("bayes_factor_surprise: degenerate posterior predictive");
  return p_change / p_stay;
}

double change_posterior(double surprise, double change_prob) {
  if (!(surprise > 0.0)) throw std::domain_error("change_posterior: surprise must be positive");
  if (!(change_prob >= 0.0 && change_prob < 1.0))
    throw std::domain_error("change_posterior: rho must lie in [0, 1)");
  const double odds = change_prob / (1.0 - change_prob) * surprise;
  return odds / (1.0 + odds);
}

void smile_apply(BeliefState& b, int arm, int outcome, double gamma) {
  check_arm(b, arm);
  check_outcome(outcome);
  const int num_arms = static_cast<int>(b.alpha.size());
  for (int k = 0; k < num_arms; ++k) {
    b.alpha[k] = (1.0 - gamma) * b.alpha[k] + gamma * b.alpha0;
    b.beta[k] = (1.0 - gamma) * b.beta[k] + gamma * b.beta0;
  }
  b.alpha[arm] += outcome;
  b.beta[arm] += 1 - outcome;
  b.last_change_posterior = gamma;
}

void smile_update(BeliefState& b, int arm, int outcome) {
  const double surprise = bayes_factor_surprise(b, arm, outcome);
  smile_apply(b, arm, outcome, change_posterior(surprise, b.change_prob));
}

CollapsedPrior collapsed_prior(const BeliefState& b, int arm) {
  check_arm(b, arm);
  const double rho = b.change_prob;
  return {(1.0 - rho) * b.alpha[arm] + rho * b.alpha0,
          (1.0 - rho) * b.beta[arm] + rho * b.beta0};
}

}  // namespace banditsim
