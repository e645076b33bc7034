#include "geobroker/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <fmt/format.h>

namespace geobroker {
namespace {

bool close(double x, double y) {
  return std::abs(x - y) <= kEpsilon * std::max({1.0, std::abs(x), std::abs(y)});
}

void check_exclusive(std::vector<std::pair<Interval, JobId>> spans, const std::string& resource,
                     std::vector<std::string>& out) {
  std::sort(spans.begin(), spans.end(),
            [](const auto& x, const auto& y) { return x.first.start < y.first.start; });
  // Any overlap shows up against the span reaching furthest so far.
  std::size_t reach = 0;
  for (std::size_t k = 1; k < spans.size(); ++k) {
    if (spans[k].first.start < spans[reach].first.end - kEpsilon && spans[k].second != spans[reach].second) {
      out.push_back(fmt::format("jobs {} and {} overlap on {}", spans[reach].second, spans[k].second, resource));
    }
    if (spans[k].first.end > spans[reach].first.end) reach = k;
  }
}

}  // namespace

std::vector<std::string> validate_result(const Scenario& scenario, const ScheduleResult& result) {
  std::vector<std::string> out;
  if (result.jobs.size() != scenario.jobs.size()) {
    out.push_back(fmt::format("result has {} outcomes for {} jobs", result.jobs.size(), scenario.jobs.size()));
    return out;
  }

  std::map<SiteId, std::vector<std::pair<Interval, JobId>>> machines, egress, ingress;
  std::vector<SiteCost> per_site(scenario.sites.size());

  for (std::size_t j = 0; j < result.jobs.size(); ++j) {
    const JobOutcome& o = result.jobs[j];
    const Job& job = scenario.jobs[j];
    if (o.job_id != j || o.assignment.job_id != j) {
      out.push_back(fmt::format("outcome at position {} is labelled job {}", j, o.job_id));
      continue;
    }
    const SiteId target = o.assignment.target_site;
    if (target >= scenario.sites.size()) {
      out.push_back(fmt::format("job {} assigned to unknown site {}", j, target));
      continue;
    }
    if (o.assignment.is_remote != (target != job.home_site)) {
      out.push_back(fmt::format("job {} remote flag disagrees with its placement", j));
    }

    if (!o.admitted()) {
      if (o.transfer || !o.compute_segments.empty()) {
        out.push_back(fmt::format("rejected job {} still holds resources", j));
      }
      if (o.cost.energy != 0.0 || o.cost.network != 0.0) {
        out.push_back(fmt::format("rejected job {} is charged", j));
      }
      continue;
    }

    const DataCenter& site = scenario.sites[target];
    const DataCenter& home = scenario.sites[job.home_site];

    // Compute phase.
    if (o.compute_segments.empty()) {
      out.push_back(fmt::format("admitted job {} has no compute segments", j));
      continue;
    }
    double computed = 0.0;
    for (std::size_t s = 0; s < o.compute_segments.size(); ++s) {
      const Interval& seg = o.compute_segments[s];
      if (seg.end < seg.start) out.push_back(fmt::format("job {} has an inverted compute segment", j));
      if (s > 0 && seg.start < o.compute_segments[s - 1].end - kEpsilon) {
        out.push_back(fmt::format("job {} compute segments are unordered or overlapping", j));
      }
      computed += seg.length();
      machines[target].emplace_back(seg, j);
    }
    const double first = o.compute_segments.front().start;
    const double last = o.compute_segments.back().end;
    if (first < job.arrival - kEpsilon) {
      out.push_back(fmt::format("job {} computes at {} before arrival {}", j, first, job.arrival));
    }
    if (last > job.deadline + kEpsilon) {
      out.push_back(fmt::format("job {} finishes at {} after deadline {}", j, last, job.deadline));
    }
    if (!close(computed, job.workload / site.compute_capacity)) {
      out.push_back(fmt::format("job {} computes for {} but needs {}", j, computed,
                                job.workload / site.compute_capacity));
    }

    // Transfer phase.
    if (o.assignment.is_remote) {
      if (!o.transfer) {
        out.push_back(fmt::format("remote job {} has no transfer", j));
      } else {
        const Interval& t = *o.transfer;
        const double needed = job.data_size / std::min(home.bw_out, site.bw_in);
        if (t.start < job.arrival - kEpsilon) {
          out.push_back(fmt::format("job {} transfers at {} before arrival {}", j, t.start, job.arrival));
        }
        if (t.end > first + kEpsilon) {
          out.push_back(fmt::format("job {} transfer ends at {} after compute starts at {}", j, t.end, first));
        }
        if (!close(t.length(), needed)) {
          out.push_back(fmt::format("job {} transfers for {} but needs {}", j, t.length(), needed));
        }
        egress[job.home_site].emplace_back(t, j);
        ingress[target].emplace_back(t, j);
      }
    } else if (o.transfer) {
      out.push_back(fmt::format("local job {} has a transfer", j));
    }

    // Costs.
    const double energy = job.workload * site.energy_price;
    const double network =
        o.assignment.is_remote ? job.data_size * (home.net_price_out + site.net_price_in) : 0.0;
    if (!close(o.cost.energy, energy) || !close(o.cost.network, network)) {
      out.push_back(fmt::format("job {} booked cost ({}, {}) but model gives ({}, {})", j, o.cost.energy,
                                o.cost.network, energy, network));
    }
    if (o.assignment.is_remote && !(energy + network < job.workload * home.energy_price)) {
      out.push_back(fmt::format("remote job {} costs {} which is not below its local cost {}", j,
                                energy + network, job.workload * home.energy_price));
    }
    per_site[target].energy += energy;
    per_site[target].network += network;
  }

  for (auto& [site, spans] : machines) check_exclusive(spans, fmt::format("machine of site {}", site), out);
  for (auto& [site, spans] : egress) check_exclusive(spans, fmt::format("egress of site {}", site), out);
  for (auto& [site, spans] : ingress) check_exclusive(spans, fmt::format("ingress of site {}", site), out);

  double total = 0.0;
  for (const SiteCost& s : per_site) total += s.energy + s.network;
  if (!close(total, result.cost.total)) {
    out.push_back(fmt::format("cost report total {} but admitted jobs sum to {}", result.cost.total, total));
  }
  return out;
}

}  // namespace geobroker
