#include "banditsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace banditsim {

double cumulative_regret(std::span<const double> best_probs,
                         std::span<const double> chosen_probs) {
  if (best_probs.size() != chosen_probs.size())
    throw std::invalid_argument("cumulative_regret: trace length mismatch");
  double total = 0.0;
  for (std::size_t t = 0; t < best_probs.size(); ++t) total += best_probs[t] - chosen_probs[t];
  return total;
}

double regret_rate(std::span<const double> best_probs, std::span<const double> chosen_probs) {
  if (best_probs.empty()) throw std::invalid_argument("regret_rate: empty trace");
  return cumulative_regret(best_probs, chosen_probs) / static_cast<double>(best_probs.size());
}

double lower_bound(int num_arms, double epsilon, long long horizon) {
  if (num_arms < 2) throw std::invalid_argument("lower_bound: K must be at least 2");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("lower_bound: epsilon must lie in (0, 0.5)");
  if (horizon < 1) throw std::invalid_argument("lower_bound: T must be at least 1");
  return 2.0 * epsilon * (num_arms - 1) * std::log(static_cast<double>(horizon)) /
         std::log1p(4.0 * epsilon * epsilon);
}

double lower_bound_approx(int num_arms, double epsilon, long long horizon) {
  if (num_arms < 2) throw std::invalid_argument("lower_bound_approx: K must be at least 2");
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("lower_bound_approx: epsilon must lie in (0, 0.5)");
  if (horizon < 1) throw std::invalid_argument("lower_bound_approx: T must be at least 1");
  return (num_arms - 1) / (2.0 * epsilon) * std::log(static_cast<double>(horizon));
}

double kl_bernoulli(double p, double q) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0))
    throw std::domain_error("kl_bernoulli: p and q must lie strictly inside (0, 1)");
  return p * std::log(p / q) + (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
}

double random_upper_bound(int num_arms, double epsilon, long long horizon) {
  if (num_arms < 2) throw std::invalid_argument("random_upper_bound: K must be at least 2");
  if (horizon < 0) throw std::invalid_argument("random_upper_bound: T must be non-negative");
  return static_cast<double>(horizon) * epsilon * (num_arms - 1) / num_arms;
}

MeanCi mean_ci(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("mean_ci: need at least two samples");
  double mean = 0.0;
  for (const double s : samples) mean += s;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (const double s : samples) ss += (s - mean) * (s - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  const double half = 1.96 * sd / std::sqrt(static_cast<double>(n));
  return {mean, mean - half, mean + half};
}

}  // namespace banditsim
