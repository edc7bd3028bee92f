#include "banditsim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace banditsim {

namespace {

double time_loop(PolicyKind kind, int num_arms, long long horizon, RngStream& rng) {
  BeliefState beliefs = init_beliefs(num_arms, 0.0);
  FrequentistState freq = init_frequentist(num_arms);
  constexpr double kLambda = 0.1;
  volatile int sink = 0;  // keep the selected actions observable

  const auto start = std::chrono::steady_clock::now();
  for (long long t = 1; t <= horizon; ++t) {
    int action;
    switch (kind) {
      case PolicyKind::aai:
        action = select_action(aai_scores(beliefs, kLambda), rng, SelectMode::max);
        break;
      case PolicyKind::gai:
        action = select_action(efe_scores(beliefs, kLambda), rng, SelectMode::min);
        break;
      case PolicyKind::bucb:
        action = select_action(bucb_indices(beliefs, t), rng, SelectMode::max);
        break;
      case PolicyKind::ots:
        action = select_action(ots_indices(beliefs, rng), rng, SelectMode::max);
        break;
      case PolicyKind::ts:
        action = select_action(ts_indices(beliefs, rng), rng, SelectMode::max);
        break;
      case PolicyKind::ucb: {
        const UcbDecision d = ucb_indices(freq);
        action = d.forced_arm >= 0 ? d.forced_arm : select_action(d.indices, rng, SelectMode::max);
        break;
      }
      default:
        throw std::invalid_argument("run_bench: unsupported policy for the benchmark");
    }
    if (kind == PolicyKind::ucb)
      frequentist_update(freq, action, 1);
    else
      smile_update(beliefs, action, 1);
    sink = action;
  }
  (void)sink;
  const auto stop = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return ms / static_cast<double>(horizon);
}

}  // namespace

std::vector<BenchResult> run_bench(const std::vector<PolicyKind>& policies,
                                   const std::vector<int>& arm_counts, long long horizon,
                                   int repetitions, std::uint64_t seed) {
  if (policies.empty() || arm_counts.empty())
    throw std::invalid_argument("run_bench: empty policy or arm-count list");
  if (horizon < 1 || repetitions < 1)
    throw std::invalid_argument("run_bench: horizon and repetitions must be positive");

  std::vector<BenchResult> results;
  for (const PolicyKind kind : policies) {
    for (const int num_arms : arm_counts) {
      std::vector<double> timings;
      timings.reserve(static_cast<std::size_t>(repetitions));
      for (int rep = 0; rep < repetitions; ++rep) {
        RngStream rng = derive_stream(seed, static_cast<std::uint64_t>(rep), StreamRole::agent);
        timings.push_back(time_loop(kind, num_arms, horizon, rng));
      }
      std::sort(timings.begin(), timings.end());
      const std::size_t mid = timings.size() / 2;
      const double median = timings.size() % 2 == 1
                                ? timings[mid]
                                : 0.5 * (timings[mid - 1] + timings[mid]);
      results.push_back({kind, num_arms, median});
    }
  }
  return results;
}

}  // namespace banditsim
