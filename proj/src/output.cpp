#include "banditsim/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "banditsim/config.hpp"

namespace banditsim {

namespace {

std::string num10(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

OutputPaths bundle_paths(const std::string& prefix) {
  return {prefix + ".csv", prefix + ".finals.csv", prefix + ".summary.txt"};
}

void write_trajectory_csv(const EnsembleSummary& summary, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "trial,mean_regret_rate,rr_ci_low,rr_ci_high,mean_cum_regret,cr_ci_low,cr_ci_high\n";
  for (std::size_t c = 0; c < summary.checkpoints.size(); ++c) {
    out << summary.checkpoints[c] << ',' << num10(summary.mean_regret_rate[c]) << ',';
    if (!summary.degenerate_ci)
      out << num10(summary.rate_ci_low[c]) << ',' << num10(summary.rate_ci_high[c]);
    else
      out << ',';
    out << ',' << num10(summary.mean_cum_regret[c]) << ',';
    if (!summary.degenerate_ci)
      out << num10(summary.cum_ci_low[c]) << ',' << num10(summary.cum_ci_high[c]);
    else
      out << ',';
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_finals_csv(const EnsembleSummary& summary, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "run_index,final_cum_regret\n";
  for (std::size_t r = 0; r < summary.final_regret_per_run.size(); ++r)
    out << r << ',' << num10(summary.final_regret_per_run[r]) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_summary(const EnsembleSummary& summary, const std::string& path, double wall_seconds) {
  std::ofstream out = open_out(path);
  out << "version = " << kVersion << '\n';
  for (const auto& [key, value] : config_kv(summary.config))
    out << key << " = " << value << '\n';
  out << "wall_clock_seconds = " << num10(wall_seconds) << '\n';
  const std::size_t last = summary.checkpoints.size() - 1;
  out << "final_trial = " << summary.checkpoints[last] << '\n';
  out << "final_mean_regret_rate = " << num10(summary.mean_regret_rate[last]) << '\n';
  out << "final_mean_cum_regret = " << num10(summary.mean_cum_regret[last]) << '\n';
  if (!summary.degenerate_ci) {
    out << "final_rate_ci_low = " << num10(summary.rate_ci_low[last]) << '\n';
    out << "final_rate_ci_high = " << num10(summary.rate_ci_high[last]) << '\n';
    out << "final_cum_ci_low = " << num10(summary.cum_ci_low[last]) << '\n';
    out << "final_cum_ci_high = " << num10(summary.cum_ci_high[last]) << '\n';
  } else {
    out << "final_ci = degenerate\n";
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

OutputPaths write_output_bundle(const EnsembleSummary& summary, const std::string& prefix,
                                double wall_seconds) {
  const OutputPaths paths = bundle_paths(prefix);
  write_trajectory_csv(summary, paths.trajectory_csv);
  write_finals_csv(summary, paths.finals_csv);
  write_summary(summary, paths.summary, wall_seconds);
  return paths;
}

}  // namespace banditsim
