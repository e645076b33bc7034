#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "geobroker/comp_scheduler.hpp"
#include "geobroker/site_selection.hpp"
#include "geobroker/transfer_scheduler.hpp"

namespace geobroker::testing {

/// Maximum intensity at every port by exhaustive enumeration: every flow
/// release at the port as a start, every flow deadline at the port as an
/// end, enclosed demand summed by a direct scan. Returns one value per port
/// in (site, egress/ingress) order.
inline std::vector<double> brute_force_port_intensities(std::span<const Flow> flows, const PortTimeline& ports) {
  std::vector<double> out;
  for (SiteId site = 0; site < ports.num_sites(); ++site) {
    for (PortDirection dir : {PortDirection::egress, PortDirection::ingress}) {
      const PortId port{site, dir};
      std::vector<const Flow*> at_port;
      for (const Flow& f : flows) {
        if ((dir == PortDirection::egress ? f.src : f.dst) == site) at_port.push_back(&f);
      }
      double best = 0.0;
      for (const Flow* s : at_port) {
        for (const Flow* e : at_port) {
          const double a = s->window.start;
          const double b = e->window.end;
          if (b < a) continue;
          double demand = 0.0;
          for (const Flow* f : at_port) {
            if (f->window.start >= a - 1e-12 && f->window.end <= b + 1e-12) demand += f->norm_size;
          }
          const double free = ports.at(port).free_time({a, b});
          double value = 0.0;
          if (demand > 0.0) value = free <= 1e-12 ? std::numeric_limits<double>::infinity() : demand / free;
          best = std::max(best, value);
        }
      }
      out.push_back(best);
    }
  }
  return out;
}

/// Minimum average completion over all n! non-preemptive orders on one
/// unit-rate machine with release times.
inline double best_nonpreemptive_average_completion(std::span<const ReversedJob> jobs) {
  std::vector<std::size_t> order(jobs.size());
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double now = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t i : order) {
      now = std::max(now, jobs[i].rev_arrival) + jobs[i].proc;
      sum += now;
    }
    best = std::min(best, sum / static_cast<double>(jobs.size()));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Minimum average completion over preemptive schedules, by exhaustive
/// search. Some optimal schedule only switches jobs at releases and
/// completions and never idles while work is pending, so at each such
/// event every pending job is tried as the one to run next.
inline double best_preemptive_average_completion(std::span<const ReversedJob> jobs) {
  const std::size_t n = jobs.size();
  std::vector<double> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = jobs[i].proc;
  double best = std::numeric_limits<double>::infinity();

  auto search = [&](auto&& self, double now, double sum, std::size_t done) -> void {
    if (done == n) {
      best = std::min(best, sum);
      return;
    }
    if (sum >= best) return;
    double next_release = std::numeric_limits<double>::infinity();
    bool any_ready = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (remaining[i] <= 0.0) continue;
      if (jobs[i].rev_arrival <= now + 1e-12) {
        any_ready = true;
      } else {
        next_release = std::min(next_release, jobs[i].rev_arrival);
      }
    }
    if (!any_ready) {
      self(self, next_release, sum, done);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (remaining[i] <= 0.0 || jobs[i].rev_arrival > now + 1e-12) continue;
      const double saved = remaining[i];
      if (now + saved <= next_release) {
        remaining[i] = 0.0;
        self(self, now + saved, sum + now + saved, done + 1);
      } else {
        remaining[i] = saved - (next_release - now);
        self(self, next_release, sum, done);
      }
      remaining[i] = saved;
    }
  };
  double start = std::numeric_limits<double>::infinity();
  for (const ReversedJob& j : jobs) start = std::min(start, j.rev_arrival);
  search(search, start, 0.0, 0);
  return best / static_cast<double>(n);
}

/// Average completion of a schedule given as per-job segments.
inline double average_completion(std::span<const JobSegments> schedule) {
  double sum = 0.0;
  for (const JobSegments& j : schedule) sum += j.end();
  return sum / static_cast<double>(schedule.size());
}

/// Flows the pipeline would hand to the transfer phase: site selection,
/// then per-site computation scheduling, then normalization.
inline std::vector<Flow> pipeline_flows(const Scenario& scenario, SitePolicy policy, std::uint64_t seed) {
  Rng rng(seed);
  const auto assignments = assign_sites(scenario, policy, rng);
  std::vector<std::vector<Job>> per_site(scenario.sites.size());
  for (const Job& job : scenario.jobs) per_site[assignments[job.id].target_site].push_back(job);
  std::map<JobId, double> starts;
  for (const DataCenter& site : scenario.sites) {
    const auto& jobs = per_site[site.id];
    if (jobs.empty()) continue;
    std::vector<double> lead;
    for (const Job& job : jobs) lead.push_back(transfer_time(job, scenario.sites[job.home_site], site));
    for (const auto& [id, start] : latest_start_times(srtf_schedule(reverse_transform(jobs, site, lead)))) {
      starts.emplace(id, start);
    }
  }
  return normalize_flows(scenario, assignments, starts);
}

}  // namespace geobroker::testing
