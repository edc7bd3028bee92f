#include "banditsim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "banditsim/metrics.hpp"

namespace banditsim {

namespace {

bool is_bayesian(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::aai:
    case PolicyKind::gai:
    case PolicyKind::bucb:
    case PolicyKind::ots:
    case PolicyKind::ts:
      return true;
    default:
      return false;
  }
}

EnvState make_env(const EnvConfig& cfg, RngStream& rng) {
  if (cfg.mode == EnvMode::stationary) return init_stationary(cfg.num_arms, cfg.epsilon, rng);
  return init_switching(cfg.num_arms, cfg.epsilon, cfg.switch_prob, cfg.mode, rng);
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.env.num_arms < 2) throw std::invalid_argument("K must be at least 2");
  if (cfg.env.mode == EnvMode::stationary) {
    if (cfg.env.switch_prob != 0.0)
      throw std::invalid_argument("rho must be 0 in the stationary mode");
  } else if (!(cfg.env.switch_prob > 0.0 && cfg.env.switch_prob < 1.0)) {
    throw std::invalid_argument("rho must lie in (0, 1) for switching bandits");
  }
  if (cfg.env.mode != EnvMode::switching_resample &&
      !(cfg.env.epsilon > 0.0 && cfg.env.epsilon < 0.5))
    throw std::invalid_argument("epsilon must lie in (0, 0.5)");
  if (!(cfg.policy.preference_precision >= 0.0))
    throw std::invalid_argument("lambda must be non-negative");
  if (cfg.horizon < 1) throw std::invalid_argument("T must be at least 1");
  if (cfg.ensemble_size < 1) throw std::invalid_argument("N must be at least 1");
  if (cfg.granularity == RecordGranularity::every_trial && cfg.horizon > 10000)
    throw std::invalid_argument("every_trial recording is limited to T <= 10000");
}

std::vector<long long> checkpoint_trials(long long horizon, RecordGranularity granularity) {
  if (horizon < 1) throw std::invalid_argument("checkpoint_trials: T must be at least 1");
  std::vector<long long> points;
  if (granularity == RecordGranularity::every_trial) {
    points.reserve(static_cast<std::size_t>(horizon));
    for (long long t = 1; t <= horizon; ++t) points.push_back(t);
    return points;
  }
  for (long long t = 1; t < horizon; t *= 2) points.push_back(t);
  points.push_back(horizon);
  return points;
}

RunTrace run_episode(const ExperimentConfig& cfg, int run_index) {
  validate_config(cfg);
  if (run_index < 0) throw std::invalid_argument("run_episode: run_index must be non-negative");

  RngStream env_rng = derive_stream(cfg.master_seed, run_index, StreamRole::env);
  RngStream agent_rng = derive_stream(cfg.master_seed, run_index, StreamRole::agent);

  EnvState env = make_env(cfg.env, env_rng);
  const int K = cfg.env.num_arms;
  const PolicyKind kind = cfg.policy.kind;
  const double lambda = cfg.policy.preference_precision;

  // All Bayesian policies share one learning rule; the agent is told the
  // true change probability.
  BeliefState beliefs = init_beliefs(K, cfg.env.switch_prob);
  FrequentistState freq = init_frequentist(K);

  RunTrace trace;
  const std::size_t T = static_cast<std::size_t>(cfg.horizon);
  trace.actions.reserve(T);
  trace.outcomes.reserve(T);
  trace.best_probs.reserve(T);
  trace.chosen_probs.reserve(T);
  trace.regret_increments.reserve(T);
  trace.switched.reserve(T);

  for (long long t = 1; t <= cfg.horizon; ++t) {
    int action;
    switch (kind) {
      case PolicyKind::aai:
        action = select_action(aai_scores(beliefs, lambda), agent_rng, SelectMode::max);
        break;
      case PolicyKind::gai:
        action = select_action(efe_scores(beliefs, lambda), agent_rng, SelectMode::min);
        break;
      case PolicyKind::bucb:
        action = select_action(bucb_indices(beliefs, t), agent_rng, SelectMode::max);
        break;
      case PolicyKind::ots:
        action = select_action(ots_indices(beliefs, agent_rng), agent_rng, SelectMode::max);
        break;
      case PolicyKind::ts:
        action = select_action(ts_indices(beliefs, agent_rng), agent_rng, SelectMode::max);
        break;
      case PolicyKind::ucb: {
        const UcbDecision d = ucb_indices(freq);
        action = d.forced_arm >= 0 ? d.forced_arm
                                   : select_action(d.indices, agent_rng, SelectMode::max);
        break;
      }
      case PolicyKind::random_choice:
        action = random_index(K, agent_rng);
        break;
      case PolicyKind::oracle:
        action = env.best_arm;  // diagnostic baseline, not reachable from the CLI
        break;
      default:
        throw std::logic_error("run_episode: unknown policy kind");
    }

    const StepInfo info = env_step(env, action, env_rng);

    if (is_bayesian(kind)) {
      smile_update(beliefs, action, info.outcome);
    } else if (kind == PolicyKind::ucb) {
      frequentist_update(freq, action, info.outcome);
    }

    trace.actions.push_back(action);
    trace.outcomes.push_back(static_cast<std::uint8_t>(info.outcome));
    trace.best_probs.push_back(info.best_reward_prob);
    trace.chosen_probs.push_back(info.chosen_reward_prob);
    trace.regret_increments.push_back(info.best_reward_prob - info.chosen_reward_prob);
    trace.switched.push_back(info.switched ? 1 : 0);
  }
  return trace;
}

namespace {

struct PerRunStats {
  std::vector<double> cum_at_checkpoint;
  double final_cum = 0.0;
};

PerRunStats reduce_trace(const RunTrace& trace, const std::vector<long long>& checkpoints) {
  PerRunStats stats;
  stats.cum_at_checkpoint.resize(checkpoints.size());
  double running = 0.0;
  std::size_t next = 0;
  for (std::size_t t = 0; t < trace.regret_increments.size(); ++t) {
    running += trace.regret_increments[t];
    while (next < checkpoints.size() &&
           checkpoints[next] == static_cast<long long>(t) + 1) {
      stats.cum_at_checkpoint[next] = running;
      ++next;
    }
  }
  stats.final_cum = running;
  return stats;
}

}  // namespace

EnsembleSummary run_ensemble(const ExperimentConfig& cfg, unsigned workers) {
  validate_config(cfg);
  const std::vector<long long> checkpoints = checkpoint_trials(cfg.horizon, cfg.granularity);
  const int N = cfg.ensemble_size;

  std::vector<PerRunStats> per_run(static_cast<std::size_t>(N));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(N));

  std::atomic<int> next_run{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      const int run = next_run.fetch_add(1);
      if (run >= N) return;
      try {
        per_run[static_cast<std::size_t>(run)] = reduce_trace(run_episode(cfg, run), checkpoints);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  EnsembleSummary out;
  out.config = cfg;
  out.checkpoints = checkpoints;
  const std::size_t C = checkpoints.size();
  out.mean_regret_rate.resize(C);
  out.rate_ci_low.resize(C);
  out.rate_ci_high.resize(C);
  out.mean_cum_regret.resize(C);
  out.cum_ci_low.resize(C);
  out.cum_ci_high.resize(C);
  out.degenerate_ci = N == 1;

  std::vector<double> column(static_cast<std::size_t>(N));
  for (std::size_t c = 0; c < C; ++c) {
    for (int r = 0; r < N; ++r)
      column[static_cast<std::size_t>(r)] = per_run[static_cast<std::size_t>(r)].cum_at_checkpoint[c];
    const double trials = static_cast<double>(checkpoints[c]);
    if (out.degenerate_ci) {
      out.mean_cum_regret[c] = column[0];
      out.mean_regret_rate[c] = column[0] / trials;
      out.cum_ci_low[c] = out.cum_ci_high[c] = std::numeric_limits<double>::quiet_NaN();
      out.rate_ci_low[c] = out.rate_ci_high[c] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const MeanCi cum = mean_ci(column);
    out.mean_cum_regret[c] = cum.mean;
    out.cum_ci_low[c] = cum.lo;
    out.cum_ci_high[c] = cum.hi;
    out.mean_regret_rate[c] = cum.mean / trials;
    out.rate_ci_low[c] = cum.lo / trials;
    out.rate_ci_high[c] = cum.hi / trials;
  }

  out.final_regret_per_run.resize(static_cast<std::size_t>(N));
  for (int r = 0; r < N; ++r)
    out.final_regret_per_run[static_cast<std::size_t>(r)] = per_run[static_cast<std::size_t>(r)].final_cum;
  return out;
}

SweepGrid singleton_grid(const ExperimentConfig& base) {
  SweepGrid grid;
  grid.arm_counts = {base.env.num_arms};
  grid.epsilons = {base.env.epsilon};
  grid.switch_probs = {base.env.switch_prob};
  grid.precisions = {base.policy.preference_precision};
  grid.policies = {base.policy.kind};
  grid.horizons = {base.horizon};
  return grid;
}

std::size_t grid_size(const SweepGrid& grid) {
  return grid.arm_counts.size() * grid.epsilons.size() * grid.switch_probs.size() *
         grid.precisions.size() * grid.policies.size() * grid.horizons.size();
}

std::uint64_t sweep_cell_seed(std::uint64_t master_seed, std::size_t cell_index) {
  return mix64(mix64(master_seed) ^ (static_cast<std::uint64_t>(cell_index) * 0xD6E8FEB86659FD93ull + 0x632BE59BD9B4E019ull));
}

ExperimentConfig sweep_cell_config(const ExperimentConfig& base, const SweepGrid& grid,
                                   std::size_t cell_index) {
  if (grid.arm_counts.empty() || grid.epsilons.empty() || grid.switch_probs.empty() ||
      grid.precisions.empty() || grid.policies.empty() || grid.horizons.empty())
    throw std::invalid_argument("sweep grid has an empty dimension");
  if (cell_index >= grid_size(grid)) throw std::invalid_argument("sweep cell index out of range");

  std::size_t rest = cell_index;
  const std::size_t i_T = rest % grid.horizons.size();
  rest /= grid.horizons.size();
  const std::size_t i_pol = rest % grid.policies.size();
  rest /= grid.policies.size();
  const std::size_t i_lam = rest % grid.precisions.size();
  rest /= grid.precisions.size();
  const std::size_t i_rho = rest % grid.switch_probs.size();
  rest /= grid.switch_probs.size();
  const std::size_t i_eps = rest % grid.epsilons.size();
  rest /= grid.epsilons.size();
  const std::size_t i_K = rest;

  ExperimentConfig cfg = base;
  cfg.env.num_arms = grid.arm_counts[i_K];
  cfg.env.epsilon = grid.epsilons[i_eps];
  cfg.env.switch_prob = grid.switch_probs[i_rho];
  cfg.policy.preference_precision = grid.precisions[i_lam];
  cfg.policy.kind = grid.policies[i_pol];
  cfg.horizon = grid.horizons[i_T];
  cfg.master_seed = sweep_cell_seed(base.master_seed, cell_index);
  return cfg;
}

std::vector<EnsembleSummary> run_sweep(const ExperimentConfig& base, const SweepGrid& grid,
                                       unsigned workers) {
  const std::size_t cells = grid_size(grid);
  if (cells == 0) throw std::invalid_argument("sweep grid has an empty dimension");
  // Validate the whole grid before any cell starts computing.
  for (std::size_t c = 0; c < cells; ++c) validate_config(sweep_cell_config(base, grid, c));
  std::vector<EnsembleSummary> summaries;
  summaries.reserve(cells);
  for (std::size_t c = 0; c < cells; ++c)
    summaries.push_back(run_ensemble(sweep_cell_config(base, grid, c), workers));
  return summaries;
}

}  // namespace banditsim
