#pragma once

#include <span>

namespace banditsim {

// Sum of per-trial shortfalls against the per-trial best arm (dynamic
// oracle); coincides with the usual horizon form when the bandit is
// stationary.
double cumulative_regret(std::span<const double> best_probs, std::span<const double> chosen_probs);

double regret_rate(std::span<const double> best_probs, std::span<const double> chosen_probs);

// Asymptotic logarithmic reference for the structured Bernoulli bandit:
// 2*eps*(K-1) * ln(T) / ln(1 + 4*eps^2). Reference curve only.
double lower_bound(int num_arms, double epsilon, long long horizon);

// The cruder (K-1)/(2*eps) * ln(T) variant of the same reference.
double lower_bound_approx(int num_arms, double epsilon, long long horizon);

double kl_bernoulli(double p, double q);

// Expected cumulative regret of uniform random choice: T*eps*(K-1)/K.
double random_upper_bound(int num_arms, double epsilon, long long horizon);

struct MeanCi {
  double mean;
  double lo;
  double hi;
};

// Normal-approximation 95% interval: mean +- 1.96 * s / sqrt(n), sample
// standard deviation with the n-1 denominator. Needs n >= 2.
MeanCi mean_ci(std::span<const double> samples);

}  // namespace banditsim
