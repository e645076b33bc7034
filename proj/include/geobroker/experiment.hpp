#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "geobroker/pipeline.hpp"
#include "geobroker/workload.hpp"

namespace geobroker {

inline constexpr std::string_view kCsvHeader =
    "seed,policy,admitted,total,admission_rate,energy_cost,network_cost,total_cost,norm_admission,norm_cost,"
    "wall_time_s";

enum class Policy { min_cost, random_candidate, baseline };

std::string_view to_string(Policy policy);
/// Accepts "min-cost", "random-candidate" and "baseline".
Policy parse_policy(std::string_view name);

/// proposed / baseline, with 0/0 read as 1 and x/0 as +inf.
double normalized(double proposed, double baseline);

/// Runs `policy` on the scenario. The baseline runs too, as the denominator
/// of the normalized columns (the baseline policy normalizes to 1).
struct PolicyRun {
  RunOutput proposed;
  RunMetrics baseline;
  double norm_admission = 1.0;
  double norm_cost = 1.0;
};

PolicyRun run_policy(const Scenario& scenario, Policy policy, const PipelineOptions& options);

struct ExperimentConfig {
  std::size_t num_sites = 20;
  std::size_t num_jobs = 200;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  Policy policy = Policy::random_candidate;
  bool recompute = false;
  PruneMetric prune_metric = PruneMetric::normalized;
  /// When false, wall times are reported as 0 so output is byte-stable.
  bool record_timing = true;
  DistributionConfig distributions;
};

struct ComparisonRow {
  std::uint64_t seed = 0;
  RunMetrics proposed;
  RunMetrics baseline;
  double norm_admission = 1.0;
  double norm_cost = 1.0;
};

struct ComparisonReport {
  Policy policy = Policy::random_candidate;
  std::vector<ComparisonRow> rows;
  double mean_norm_admission = 1.0;
  double mean_norm_cost = 1.0;
};

/// Per seed: generate a scenario from the seed, run the policy (seeded with
/// the same value) and the baseline, normalize against the baseline.
ComparisonReport run_experiment(const ExperimentConfig& config);

void write_csv_row(std::ostream& out, std::string_view seed, Policy policy, const RunMetrics& metrics,
                   double norm_admission, double norm_cost);

/// Header, one row per seed, then a "mean" row averaging every column.
void write_comparison_csv(std::ostream& out, const ComparisonReport& report);

}  // namespace geobroker
