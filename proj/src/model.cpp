#include "geobroker/model.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "geobroker/errors.hpp"

namespace geobroker {

void validate(const Scenario& scenario) {
  const auto& sites = scenario.sites;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const DataCenter& s = sites[i];
    if (s.id != i) {
      throw ScenarioError(fmt::format("site ids must be dense and 0-based: site at position {} has id {}", i, s.id));
    }
    if (!(s.compute_capacity > 0.0) || !(s.bw_in > 0.0) || !(s.bw_out > 0.0)) {
      throw ScenarioError(fmt::format("site {}: capacity and bandwidths must be positive", i));
    }
    if (!(s.energy_price >= 0.0) || !(s.net_price_in >= 0.0) || !(s.net_price_out >= 0.0)) {
      throw ScenarioError(fmt::format("site {}: prices must be non-negative", i));
    }
  }
  for (std::size_t j = 0; j < scenario.jobs.size(); ++j) {
    const Job& job = scenario.jobs[j];
    if (job.id != j) {
      throw ScenarioError(fmt::format("job ids must be dense and 0-based: job at position {} has id {}", j, job.id));
    }
    if (!(job.arrival < job.deadline)) {
      throw ScenarioError(fmt::format("job {}: arrival must precede deadline", j));
    }
    if (!(job.workload > 0.0)) {
      throw ScenarioError(fmt::format("job {}: workload must be positive", j));
    }
    if (!(job.data_size >= 0.0)) {
      throw ScenarioError(fmt::format("job {}: data size must be non-negative", j));
    }
    if (job.home_site >= sites.size()) {
      throw ScenarioError(fmt::format("job {}: home site {} does not exist", j, job.home_site));
    }
  }
}

double overlap(const Interval& a, const Interval& b) {
  return std::max(0.0, std::min(a.end, b.end) - std::max(a.start, b.start));
}

Assignment local_assignment(const Job& job) {
  return Assignment{job.id, job.home_site, false};
}

Assignment make_assignment(const Job& job, SiteId target) {
  return Assignment{job.id, target, target != job.home_site};
}

JobCost job_cost(const Job& job, const DataCenter& target, const DataCenter& home,
                 bool is_remote) {
  JobCost cost;
  cost.energy = target.energy_price * job.workload;
  if (is_remote) {
    cost.network = job.data_size * (home.net_price_out + target.net_price_in);
  }
  return cost;
}

double comp_time(std::span<const double> workloads, const DataCenter& site) {
  return std::accumulate(workloads.begin(), workloads.end(), 0.0) / site.compute_capacity;
}

double transfer_time(const Job& job, const DataCenter& home, const DataCenter& target) {
  if (home.id == target.id) {
    return 0.0;
  }
  return job.data_size / std::min(home.bw_out, target.bw_in);
}

std::string_view to_string(Rejection reason) {
  switch (reason) {
    case Rejection::none:
      return "none";
    case Rejection::no_feasible_window:
      return "no-feasible-window";
    case Rejection::pruned_transfer:
      return "pruned-transfer";
    case Rejection::transfer_conflict:
      return "transfer-conflict";
  }
  return "unknown";
}

double CostReport::energy() const {
  double sum = 0.0;
  for (const auto& s : per_site) sum += s.energy;
  return sum;
}

double CostReport::network() const {
  double sum = 0.0;
  for (const auto& s : per_site) sum += s.network;
  return sum;
}

CostReport total_cost(const Scenario& scenario, std::span<const JobOutcome> outcomes) {
  CostReport report;
  report.per_site.resize(scenario.sites.size());
  for (std::size_t i = 0; i < report.per_site.size(); ++i) {
    report.per_site[i].site = i;
  }
  for (const JobOutcome& outcome : outcomes) {
    if (!outcome.admitted()) continue;
    const Job& job = scenario.jobs.at(outcome.job_id);
    const SiteId target = outcome.assignment.target_site;
    const JobCost cost = job_cost(job, scenario.sites.at(target),
                                  scenario.sites.at(job.home_site), outcome.assignment.is_remote);
    report.per_site[target].energy += cost.energy;
    report.per_site[target].network += cost.network;
  }
  for (const auto& s : report.per_site) {
    report.total += s.energy + s.network;
  }
  return report;
}

}  // namespace geobroker
