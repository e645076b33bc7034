#include "geobroker/experiment.hpp"

#include <limits>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace geobroker {

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::min_cost:
      return "min-cost";
    case Policy::random_candidate:
      return "random-candidate";
    case Policy::baseline:
      return "baseline";
  }
  return "unknown";
}

Policy parse_policy(std::string_view name) {
  for (Policy p : {Policy::min_cost, Policy::random_candidate, Policy::baseline}) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument(fmt::format("unknown policy: {}", name));
}

double normalized(double proposed, double baseline) {
  if (baseline == 0.0) return proposed == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return proposed / baseline;
}

PolicyRun run_policy(const Scenario& scenario, Policy policy, const PipelineOptions& options) {
  PolicyRun out;
  if (policy == Policy::baseline) {
    out.proposed = run_baseline(scenario);
    out.baseline = out.proposed.metrics;
    return out;
  }
  PipelineOptions opts = options;
  opts.policy = policy == Policy::min_cost ? SitePolicy::min_cost : SitePolicy::random_candidate;
  out.proposed = run_pipeline(scenario, opts);
  out.baseline = run_baseline(scenario).metrics;
  out.norm_admission = normalized(out.proposed.metrics.admission_rate, out.baseline.admission_rate);
  out.norm_cost = normalized(out.proposed.metrics.total_cost, out.baseline.total_cost);
  return out;
}

ComparisonReport run_experiment(const ExperimentConfig& config) {
  if (config.seeds.empty()) throw std::invalid_argument("experiment needs at least one seed");
  ComparisonReport report;
  report.policy = config.policy;
  double sum_admission = 0.0;
  double sum_cost = 0.0;
  for (std::uint64_t seed : config.seeds) {
    const Scenario scenario = generate_scenario(config.num_sites, config.num_jobs, config.distributions, seed);
    PipelineOptions options;
    options.seed = seed;
    options.recompute = config.recompute;
    options.prune_metric = config.prune_metric;
    PolicyRun run = run_policy(scenario, config.policy, options);

    ComparisonRow row{seed, run.proposed.metrics, run.baseline, run.norm_admission, run.norm_cost};
    if (!config.record_timing) {
      row.proposed.wall_time = 0.0;
      row.baseline.wall_time = 0.0;
    }
    sum_admission += row.norm_admission;
    sum_cost += row.norm_cost;
    report.rows.push_back(row);
  }
  const auto n = static_cast<double>(report.rows.size());
  report.mean_norm_admission = sum_admission / n;
  report.mean_norm_cost = sum_cost / n;
  return report;
}

void write_csv_row(std::ostream& out, std::string_view seed, Policy policy, const RunMetrics& m,
                   double norm_admission, double norm_cost) {
  fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{}\n", seed, to_string(policy), m.admitted, m.total,
             m.admission_rate, m.energy_cost, m.network_cost, m.total_cost, norm_admission, norm_cost,
             m.wall_time);
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
  out << kCsvHeader << '\n';
  double admitted = 0.0, total = 0.0, rate = 0.0, energy = 0.0, network = 0.0, cost = 0.0, wall = 0.0;
  for (const ComparisonRow& row : report.rows) {
    write_csv_row(out, std::to_string(row.seed), report.policy, row.proposed, row.norm_admission, row.norm_cost);
    admitted += static_cast<double>(row.proposed.admitted);
    total += static_cast<double>(row.proposed.total);
    rate += row.proposed.admission_rate;
    energy += row.proposed.energy_cost;
    network += row.proposed.network_cost;
    cost += row.proposed.total_cost;
    wall += row.proposed.wall_time;
  }
  const auto n = static_cast<double>(report.rows.size());
  fmt::print(out, "mean,{},{},{},{},{},{},{},{},{},{}\n", to_string(report.policy), admitted / n, total / n,
             rate / n, energy / n, network / n, cost / n, report.mean_norm_admission, report.mean_norm_cost,
             wall / n);
}

}  // namespace geobroker
