#pragma once

#include <array>
#include <cstdint>

#include "geobroker/model.hpp"
#include "geobroker/site_selection.hpp"
#include "geobroker/transfer_scheduler.hpp"

namespace geobroker {

struct PipelineOptions {
  SitePolicy policy = SitePolicy::random_candidate;
  std::uint64_t seed = 0;
  /// Re-run both scheduling phases once without the jobs the transfer
  /// phase rejected, so their compute time can be reused.
  bool recompute = false;
  PruneMetric prune_metric = PruneMetric::normalized;
};

struct RunMetrics {
  std::size_t admitted = 0;
  std::size_t total = 0;
  double admission_rate = 1.0;  // 1.0 for an empty scenario
  double energy_cost = 0.0;
  double network_cost = 0.0;
  double total_cost = 0.0;
  std::array<std::size_t, kRejectionKinds> rejections{};  // indexed by Rejection
  double wall_time = 0.0;                                 // seconds

  std::size_t rejected(Rejection reason) const { return rejections[static_cast<std::size_t>(reason)]; }
};

struct RunOutput {
  ScheduleResult result;
  RunMetrics metrics;
};

RunMetrics compute_metrics(const ScheduleResult& result, double wall_time);

/// Site selection, then per-site computation scheduling on the reversed
/// instance, then transfer admission control and MCF-EDF, then costing.
/// A job is admitted only if it survives every stage. Deterministic for a
/// given (scenario, options).
RunOutput run_pipeline(const Scenario& scenario, const PipelineOptions& options = {});

/// Every job stays at home and each site runs FCFS with EDF tie-breaks.
RunOutput run_baseline(const Scenario& scenario);

}  // namespace geobroker
