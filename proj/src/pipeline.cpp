#include "geobroker/pipeline.hpp"

#include <chrono>
#include <set>

#include "geobroker/comp_scheduler.hpp"

namespace geobroker {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void reset(JobOutcome& outcome, const Assignment& assignment) {
  outcome = JobOutcome{};
  outcome.job_id = assignment.job_id;
  outcome.assignment = assignment;
}

void reject(JobOutcome& outcome, Rejection reason) {
  outcome.verdict = reason;
  outcome.transfer.reset();
  outcome.compute_segments.clear();
}

/// One comp + dtrans pass over the jobs flagged in `eligible`.
void schedule_pass(const Scenario& scenario, const std::vector<Assignment>& assignments,
                   const std::vector<bool>& eligible, PruneMetric metric,
                   std::vector<JobOutcome>& outcomes) {
  std::vector<std::vector<Job>> per_site(scenario.sites.size());
  for (const Job& job : scenario.jobs) {
    if (eligible[job.id]) per_site[assignments[job.id].target_site].push_back(job);
  }

  std::map<JobId, double> comp_starts;
  for (const DataCenter& site : scenario.sites) {
    const auto& jobs = per_site[site.id];
    if (jobs.empty()) continue;
    std::vector<double> lead;
    lead.reserve(jobs.size());
    for (const Job& job : jobs) {
      lead.push_back(transfer_time(job, scenario.sites[job.home_site], site));
    }
    const CompSchedule schedule = srtf_schedule(reverse_transform(jobs, site, lead));
    for (JobId id : schedule.rejected) reject(outcomes[id], Rejection::no_feasible_window);
    for (const JobSegments& job : schedule.admitted) {
      outcomes[job.job_id].compute_segments = job.segments;
      comp_starts.emplace(job.job_id, job.start());
    }
  }

  const std::vector<Flow> flows = normalize_flows(scenario, assignments, comp_starts);
  PortTimeline ports = make_ports(scenario);
  PruneResult pruned = prune(flows, ports, metric);
  for (JobId id : pruned.rejected) reject(outcomes[id], Rejection::pruned_transfer);

  TransferSchedule transfers = mcf_edf(pruned.kept, ports);
  for (JobId id : transfers.rejected) reject(outcomes[id], Rejection::transfer_conflict);

  // Anything the verifier flags is treated as a conflict, never admitted.
  std::set<JobId> flagged;
  for (const auto& v : verify_schedule(transfers.scheduled, pruned.kept)) {
    flagged.insert(v.jobs.begin(), v.jobs.end());
  }
  for (const auto& [id, span] : transfers.scheduled) {
    if (flagged.count(id)) {
      reject(outcomes[id], Rejection::transfer_conflict);
    } else {
      outcomes[id].transfer = span;
    }
  }
}

void book_costs(const Scenario& scenario, ScheduleResult& result) {
  for (JobOutcome& o : result.jobs) {
    o.cost = {};
    if (!o.admitted()) continue;
    const Job& job = scenario.jobs[o.job_id];
    o.cost = job_cost(job, scenario.sites[o.assignment.target_site], scenario.sites[job.home_site],
                      o.assignment.is_remote);
  }
  result.cost = total_cost(scenario, result.jobs);
}

}  // namespace

RunMetrics compute_metrics(const ScheduleResult& result, double wall_time) {
  RunMetrics m;
  m.total = result.jobs.size();
  for (const JobOutcome& o : result.jobs) {
    ++m.rejections[static_cast<std::size_t>(o.verdict)];
    if (o.admitted()) ++m.admitted;
  }
  m.admission_rate = m.total == 0 ? 1.0 : static_cast<double>(m.admitted) / static_cast<double>(m.total);
  m.energy_cost = result.cost.energy();
  m.network_cost = result.cost.network();
  m.total_cost = result.cost.total;
  m.wall_time = wall_time;
  return m;
}

RunOutput run_pipeline(const Scenario& scenario, const PipelineOptions& options) {
  const auto started = Clock::now();
  validate(scenario);

  Rng rng(options.seed);
  const std::vector<Assignment> assignments = assign_sites(scenario, options.policy, rng);

  RunOutput out;
  out.result.jobs.resize(scenario.jobs.size());
  for (const Assignment& a : assignments) reset(out.result.jobs[a.job_id], a);

  std::vector<bool> eligible(scenario.jobs.size(), true);
  schedule_pass(scenario, assignments, eligible, options.prune_metric, out.result.jobs);

  if (options.recompute) {
    for (JobOutcome& o : out.result.jobs) {
      const bool transfer_reject =
          o.verdict == Rejection::pruned_transfer || o.verdict == Rejection::transfer_conflict;
      eligible[o.job_id] = !transfer_reject;
      if (!transfer_reject) reset(o, assignments[o.job_id]);
    }
    schedule_pass(scenario, assignments, eligible, options.prune_metric, out.result.jobs);
  }

  book_costs(scenario, out.result);
  out.metrics = compute_metrics(out.result, seconds_since(started));
  return out;
}

RunOutput run_baseline(const Scenario& scenario) {
  const auto started = Clock::now();
  validate(scenario);

  RunOutput out;
  out.result.jobs.resize(scenario.jobs.size());
  std::vector<std::vector<Job>> per_site(scenario.sites.size());
  for (const Job& job : scenario.jobs) {
    reset(out.result.jobs[job.id], local_assignment(job));
    per_site[job.home_site].push_back(job);
  }
  for (const DataCenter& site : scenario.sites) {
    if (per_site[site.id].empty()) continue;
    const CompSchedule schedule = fcfs_edf_schedule(per_site[site.id], site);
    for (JobId id : schedule.rejected) reject(out.result.jobs[id], Rejection::no_feasible_window);
    for (const JobSegments& job : schedule.admitted) out.result.jobs[job.job_id].compute_segments = job.segments;
  }

  book_costs(scenario, out.result);
  out.metrics = compute_metrics(out.result, seconds_since(started));
  return out;
}

}  // namespace geobroker
