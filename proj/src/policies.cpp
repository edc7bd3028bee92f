#include "banditsim/policies.hpp"

#include <cmath>
#include <stdexcept>

#include "banditsim/specfun.hpp"

namespace banditsim {

namespace {

int num_arms_of(const BeliefState& b) { return static_cast<int>(b.alpha.size()); }

void check_lambda(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be non-negative");
}

double binary_entropy_neg(double p) {
  // p ln p + (1-p) ln(1-p); p is strictly inside (0, 1) here
  return p * std::log(p) + (1.0 - p) * std::log1p(-p);
}

}  // namespace

std::vector<double> aai_scores(const BeliefState& b, double lambda) {
  check_lambda(lambda);
  const int K = num_arms_of(b);
  std::vector<double> scores(K);
  for (int k = 0; k < K; ++k) {
    const auto [mu, nu] = posterior_stats(b, k);
    scores[k] = 2.0 * lambda * mu + 0.5 / nu;
  }
  return scores;
}

double expected_free_energy(const BeliefState& b, double lambda, int arm) {
  check_lambda(lambda);
  const auto [mu, nu] = posterior_stats(b, arm);
  const double mu_pred = predictive_mean(b, arm);
  const double stay = 1.0 - b.change_prob;
  return -2.0 * lambda * stay * mu + binary_entropy_neg(mu_pred) -
         stay * (mu * specfun::digamma(b.alpha[arm]) + (1.0 - mu) * specfun::digamma(b.beta[arm])) +
         stay * (specfun::digamma(nu) - 1.0 / nu);
}

std::vector<double> efe_scores(const BeliefState& b, double lambda) {
  const int K = num_arms_of(b);
  std::vector<double> scores(K);
  for (int k = 0; k < K; ++k) scores[k] = expected_free_energy(b, lambda, k);
  return scores;
}

double efe_risk(const BeliefState& b, double lambda, int arm) {
  check_lambda(lambda);
  const double mu_pred = predictive_mean(b, arm);
  return -lambda * (2.0 * mu_pred - 1.0) + binary_entropy_neg(mu_pred);
}

double efe_ambiguity(const BeliefState& b, int arm) {
  const auto [mu, nu] = posterior_stats(b, arm);
  const double stay = 1.0 - b.change_prob;
  return -stay * (mu * specfun::digamma(b.alpha[arm]) +
                  (1.0 - mu) * specfun::digamma(b.beta[arm]) - specfun::digamma(nu) + 1.0 / nu);
}

std::vector<double> bucb_indices(const BeliefState& b, long long trial) {
  if (trial < 1) throw std::invalid_argument("bucb_indices: trial counter starts at 1");
  double z = 1.0 - 1.0 / static_cast<double>(trial);
  if (z > 1.0 - 1e-12) z = 1.0 - 1e-12;
  const int K = num_arms_of(b);
  std::vector<double> indices(K);
  for (int k = 0; k < K; ++k) {
    const CollapsedPrior prior = collapsed_prior(b, k);
    indices[k] = specfun::inv_reg_inc_beta(z, prior.alpha, prior.beta);
  }
  return indices;
}

std::vector<double> ts_indices(const BeliefState& b, RngStream& rng) {
  const int K = num_arms_of(b);
  std::vector<double> indices(K);
  for (int k = 0; k < K; ++k) indices[k] = sample_beta(rng, b.alpha[k], b.beta[k]);
  return indices;
}

std::vector<double> ots_indices(const BeliefState& b, RngStream& rng) {
  std::vector<double> indices = ts_indices(b, rng);
  for (int k = 0; k < num_arms_of(b); ++k) {
    const double floor = predictive_mean(b, k);
    if (indices[k] < floor) indices[k] = floor;
  }
  return indices;
}

FrequentistState init_frequentist(int num_arms) {
  if (num_arms < 2) throw std::invalid_argument("init_frequentist: K must be at least 2");
  FrequentistState f;
  f.pull_counts.assign(num_arms, 0);
  f.mean_rewards.assign(num_arms, 0.0);
  return f;
}

void frequentist_update(FrequentistState& f, int arm, int outcome) {
  if (arm < 0 || arm >= static_cast<int>(f.pull_counts.size()))
    throw std::out_of_range("frequentist_update: arm index out of range");
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("frequentist_update: outcome must be 0 or 1");
  long long& n = f.pull_counts[arm];
  ++n;
  f.mean_rewards[arm] += (outcome - f.mean_rewards[arm]) / static_cast<double>(n);
  ++f.trial;
}

UcbDecision ucb_indices(const FrequentistState& f) {
  const int K = static_cast<int>(f.pull_counts.size());
  UcbDecision decision;
  if (f.trial <= K) {
    decision.forced_arm = static_cast<int>(f.trial) - 1;
    return decision;
  }
  const double log_t = std::log(static_cast<double>(f.trial));
  decision.indices.resize(K);
  for (int k = 0; k < K; ++k) {
    if (f.pull_counts[k] < 1)
      throw std::logic_error("ucb_indices: arm never initialized past the round-robin phase");
    const double n = static_cast<double>(f.pull_counts[k]);
    const double m = f.mean_rewards[k];
    decision.indices[k] = m + log_t / n + std::sqrt(m * log_t / n);
  }
  return decision;
}

int random_index(int num_arms, RngStream& rng) {
  if (num_arms < 2) throw std::invalid_argument("random_index: K must be at least 2");
  return static_cast<int>(rng.next_below(static_cast<std::uint64_t>(num_arms)));
}

int select_action(const std::vector<double>& scores, RngStream& rng, SelectMode mode) {
  if (scores.empty()) throw std::invalid_argument("select_action: empty score vector");
  for (const double s : scores) {
    if (!std::isfinite(s)) throw std::runtime_error("select_action: non-finite score");
  }
  double best = scores[0];
  for (const double s : scores) {
    if (mode == SelectMode::max ? s > best : s < best) best = s;
  }
  int tie_count = 0;
  for (const double s : scores) tie_count += s == best;
  if (tie_count == 1) {
    for (int k = 0; k < static_cast<int>(scores.size()); ++k) {
      if (scores[k] == best) return k;
    }
  }
  std::uint64_t pick = rng.next_below(static_cast<std::uint64_t>(tie_count));
  for (int k = 0; k < static_cast<int>(scores.size()); ++k) {
    if (scores[k] == best && pick-- == 0) return k;
  }
  throw std::logic_error("select_action: unreachable");
}

}  // namespace banditsim
