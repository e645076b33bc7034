#include "geobroker/transfer_scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

namespace geobroker {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t port_index(PortId port) {
  return port.site * 2 + (port.direction == PortDirection::egress ? 0 : 1);
}

PortId port_at(std::size_t index) {
  return {index / 2, index % 2 == 0 ? PortDirection::egress : PortDirection::ingress};
}

double ratio(double demand, double free) {
  if (demand <= 0.0) return 0.0;
  if (free <= kEpsilon) return kInf;
  return demand / free;
}

// -1: x ranks first, 1: y ranks first, 0: tie on intensity.
int compare_intensity(double x, double y) {
  if (std::isinf(x) && std::isinf(y)) return 0;
  if (x > y + kEpsilon) return -1;
  if (y > x + kEpsilon) return 1;
  return 0;
}

int compare_time(double x, double y) {
  if (x < y - kEpsilon) return -1;
  if (y < x - kEpsilon) return 1;
  return 0;
}

struct Candidate {
  std::size_t port = 0;
  Interval interval;
  double intensity = 0.0;
};

bool ranks_before(const Candidate& x, const Candidate& y) {
  if (int c = compare_intensity(x.intensity, y.intensity)) return c < 0;
  if (int c = compare_time(x.interval.start, y.interval.start)) return c < 0;
  // port_index orders by site, then egress before ingress.
  if (x.port != y.port) return x.port < y.port;
  return compare_time(x.interval.end, y.interval.end) < 0;
}

/// Best candidate at one port over the flows listed in `members`.
std::optional<Candidate> search_port(std::size_t port, std::span<const Flow> flows,
                                     std::span<const std::size_t> members, const SiteTimeline& timeline) {
  if (members.empty()) return std::nullopt;

  std::vector<std::size_t> by_release(members.begin(), members.end());
  std::sort(by_release.begin(), by_release.end(), [&](std::size_t x, std::size_t y) {
    return flows[x].window.start < flows[y].window.start;
  });

  std::optional<Candidate> best;
  std::vector<std::size_t> enclosed;
  for (std::size_t k = 0; k < by_release.size(); ++k) {
    const double start = flows[by_release[k]].window.start;
    if (k > 0 && flows[by_release[k - 1]].window.start >= start - kEpsilon) continue;

    enclosed.assign(by_release.begin() + static_cast<std::ptrdiff_t>(k), by_release.end());
    std::sort(enclosed.begin(), enclosed.end(), [&](std::size_t x, std::size_t y) {
      return flows[x].window.end < flows[y].window.end;
    });
    double demand = 0.0;
    for (std::size_t e = 0; e < enclosed.size(); ++e) {
      demand += flows[enclosed[e]].norm_size;
      const double end = flows[enclosed[e]].window.end;
      if (e + 1 < enclosed.size() && flows[enclosed[e + 1]].window.end <= end + kEpsilon) continue;
      const Interval interval{start, end};
      Candidate c{port, interval, ratio(demand, timeline.free_time(interval))};
      if (!best || ranks_before(c, *best)) best = c;
    }
  }
  return best;
}

/// Incremental most-critical-interval search. Results are cached per port
/// and only recomputed for ports whose flow set or busy time changed.
class CriticalSearch {
 public:
  CriticalSearch(std::span<const Flow> flows, const PortTimeline& ports)
      : flows_(flows), ports_(ports), members_(ports.num_sites() * 2),
        cache_(ports.num_sites() * 2), dirty_(ports.num_sites() * 2, true), active_(flows.size(), true) {
    for (std::size_t i = 0; i < flows.size(); ++i) {
      if (flows[i].src >= ports.num_sites() || flows[i].dst >= ports.num_sites()) {
        throw std::invalid_argument(fmt::format("flow {} references a site without ports", flows[i].job_id));
      }
      members_[port_index({flows[i].src, PortDirection::egress})].push_back(i);
      members_[port_index({flows[i].dst, PortDirection::ingress})].push_back(i);
    }
  }

  void remove(std::size_t flow) {
    active_[flow] = false;
    for (std::size_t p : {port_index({flows_[flow].src, PortDirection::egress}),
                          port_index({flows_[flow].dst, PortDirection::ingress})}) {
      auto& m = members_[p];
      m.erase(std::remove(m.begin(), m.end(), flow), m.end());
      dirty_[p] = true;
    }
  }

  std::optional<Candidate> best() {
    std::optional<Candidate> winner;
    for (std::size_t p = 0; p < cache_.size(); ++p) {
      if (dirty_[p]) {
        cache_[p] = search_port(p, flows_, members_[p], ports_.at(port_at(p)));
        dirty_[p] = false;
      }
      if (cache_[p] && (!winner || ranks_before(*cache_[p], *winner))) winner = cache_[p];
    }
    return winner;
  }

  /// Active flows at the candidate's port enclosed by its interval, by job id.
  std::vector<std::size_t> flow_set(const Candidate& c) const {
    std::vector<std::size_t> out;
    for (std::size_t i : members_[c.port]) {
      if (c.interval.contains(flows_[i].window)) out.push_back(i);
    }
    std::sort(out.begin(), out.end(),
              [&](std::size_t x, std::size_t y) { return flows_[x].job_id < flows_[y].job_id; });
    return out;
  }

  bool active(std::size_t flow) const { return active_[flow]; }

 private:
  std::span<const Flow> flows_;
  const PortTimeline& ports_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::optional<Candidate>> cache_;
  std::vector<bool> dirty_;
  std::vector<bool> active_;
};

CriticalInterval to_public(const Candidate& c, std::span<const Flow> flows,
                           std::span<const std::size_t> members) {
  CriticalInterval out{port_at(c.port), c.interval, c.intensity, {}};
  for (std::size_t i : members) out.flow_set.push_back(flows[i].job_id);
  return out;
}

}  // namespace

bool routes_through(const Flow& flow, PortId port) {
  return port.direction == PortDirection::egress ? flow.src == port.site : flow.dst == port.site;
}

PortTimeline::PortTimeline(std::size_t num_sites, Interval horizon)
    : egress_(num_sites, SiteTimeline(horizon)), ingress_(num_sites, SiteTimeline(horizon)) {}

SiteTimeline& PortTimeline::at(PortId port) {
  return port.direction == PortDirection::egress ? egress_.at(port.site) : ingress_.at(port.site);
}

const SiteTimeline& PortTimeline::at(PortId port) const {
  return port.direction == PortDirection::egress ? egress_.at(port.site) : ingress_.at(port.site);
}

PortTimeline make_ports(const Scenario& scenario) {
  Interval horizon{0.0, 0.0};
  if (!scenario.jobs.empty()) {
    horizon = {scenario.jobs.front().arrival, scenario.jobs.front().deadline};
    for (const Job& job : scenario.jobs) {
      horizon.start = std::min(horizon.start, job.arrival);
      horizon.end = std::max(horizon.end, job.deadline);
    }
  }
  return PortTimeline(scenario.sites.size(), horizon);
}

std::vector<Flow> normalize_flows(const Scenario& scenario, std::span<const Assignment> assignments,
                                  const std::map<JobId, double>& dtrans_deadlines) {
  std::vector<Flow> flows;
  for (const Assignment& a : assignments) {
    if (!a.is_remote) continue;
    auto deadline = dtrans_deadlines.find(a.job_id);
    if (deadline == dtrans_deadlines.end()) continue;
    const Job& job = scenario.jobs.at(a.job_id);
    const DataCenter& src = scenario.sites.at(job.home_site);
    const DataCenter& dst = scenario.sites.at(a.target_site);
    flows.push_back({job.id, src.id, dst.id, job.data_size, transfer_time(job, src, dst),
                     Interval{job.arrival, deadline->second}});
  }
  return flows;
}

double intensity(PortId port, const Interval& interval, std::span<const Flow> flows,
                 const PortTimeline& ports) {
  double demand = 0.0;
  for (const Flow& f : flows) {
    if (routes_through(f, port) && interval.contains(f.window)) demand += f.norm_size;
  }
  return ratio(demand, ports.at(port).free_time(interval));
}

std::optional<CriticalInterval> critical_interval(PortId port, std::span<const Flow> flows,
                                                  const PortTimeline& ports) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    if (routes_through(flows[i], port)) members.push_back(i);
  }
  auto best = search_port(port_index(port), flows, members, ports.at(port));
  if (!best) return std::nullopt;
  std::vector<std::size_t> enclosed;
  for (std::size_t i : members) {
    if (best->interval.contains(flows[i].window)) enclosed.push_back(i);
  }
  std::sort(enclosed.begin(), enclosed.end(),
            [&](std::size_t x, std::size_t y) { return flows[x].job_id < flows[y].job_id; });
  return to_public(*best, flows, enclosed);
}

CriticalInterval most_critical_interval(std::span<const Flow> flows, const PortTimeline& ports) {
  CriticalSearch search(flows, ports);
  auto best = search.best();
  if (!best) throw std::invalid_argument("most_critical_interval needs at least one flow");
  return to_public(*best, flows, search.flow_set(*best));
}

PruneResult prune(std::span<const Flow> flows, const PortTimeline& ports, PruneMetric metric) {
  PruneResult out;
  CriticalSearch search(flows, ports);
  while (auto critical = search.best()) {
    if (critical->intensity <= 1.0 + kEpsilon) break;
    const SiteTimeline& timeline = ports.at(port_at(critical->port));

    std::size_t victim = flows.size();
    double victim_ratio = -1.0;
    for (std::size_t i : search.flow_set(*critical)) {
      const Flow& f = flows[i];
      const double size = metric == PruneMetric::normalized ? f.norm_size : f.raw_size;
      const double r = ratio(size, timeline.free_time(f.window));
      // flow_set is in ascending job id, so a tie keeps the earlier victim.
      if (victim == flows.size() || compare_intensity(r, victim_ratio) < 0) {
        victim = i;
        victim_ratio = r;
      }
    }
    search.remove(victim);
    out.rejected.push_back(flows[victim].job_id);
  }
  for (std::size_t i = 0; i < flows.size(); ++i) {
    if (search.active(i)) out.kept.push_back(flows[i]);
  }
  return out;
}

TransferSchedule mcf_edf(std::span<const Flow> flows, PortTimeline& ports) {
  TransferSchedule out;
  CriticalSearch search(flows, ports);
  while (auto critical = search.best()) {
    std::vector<std::size_t> batch = search.flow_set(*critical);
    std::stable_sort(batch.begin(), batch.end(), [&](std::size_t x, std::size_t y) {
      return flows[x].window.end < flows[y].window.end;
    });
    for (std::size_t i : batch) {
      const Flow& f = flows[i];
      SiteTimeline& egress = ports.egress(f.src);
      SiteTimeline& ingress = ports.ingress(f.dst);
      const double not_before = std::max(critical->interval.start, f.window.start);
      if (auto slot = earliest_common_slot(egress, ingress, f.norm_size, not_before, f.window.end)) {
        egress.mark_busy(*slot);
        ingress.mark_busy(*slot);
        out.scheduled.emplace(f.job_id, *slot);
      } else {
        out.rejected.push_back(f.job_id);
      }
      search.remove(i);
    }
  }
  std::sort(out.rejected.begin(), out.rejected.end());
  return out;
}

std::vector<ScheduleViolation> verify_schedule(const std::map<JobId, Interval>& scheduled,
                                               std::span<const Flow> flows) {
  std::vector<ScheduleViolation> violations;
  std::map<JobId, const Flow*> by_job;
  for (const Flow& f : flows) by_job.emplace(f.job_id, &f);

  // (port index) -> (interval, job)
  std::map<std::size_t, std::vector<std::pair<Interval, JobId>>> usage;
  for (const auto& [job, span] : scheduled) {
    auto it = by_job.find(job);
    if (it == by_job.end()) {
      violations.push_back({{job}, fmt::format("flow {} is scheduled but unknown", job)});
      continue;
    }
    const Flow& f = *it->second;
    const double tol = kEpsilon * std::max(1.0, f.norm_size);
    if (std::abs(span.length() - f.norm_size) > tol) {
      violations.push_back({{job}, fmt::format("flow {} lasts {} but needs {}", job, span.length(), f.norm_size)});
    }
    if (span.start < f.window.start - kEpsilon) {
      violations.push_back({{job}, fmt::format("flow {} starts at {} before its release {}", job, span.start,
                                               f.window.start)});
    }
    if (span.end > f.window.end + kEpsilon) {
      violations.push_back({{job}, fmt::format("flow {} ends at {} after its deadline {}", job, span.end,
                                               f.window.end)});
    }
    usage[port_index({f.src, PortDirection::egress})].emplace_back(span, job);
    usage[port_index({f.dst, PortDirection::ingress})].emplace_back(span, job);
  }

  for (auto& [port, spans] : usage) {
    std::sort(spans.begin(), spans.end(), [](const auto& x, const auto& y) {
      return std::tie(x.first.start, x.second) < std::tie(y.first.start, y.second);
    });
    // Track the span reaching furthest so far; anything starting before it ends collides.
    std::size_t reach = 0;
    for (std::size_t k = 1; k < spans.size(); ++k) {
      if (overlap(spans[reach].first, spans[k].first) > kEpsilon) {
        const PortId p = port_at(port);
        violations.push_back({{spans[reach].second, spans[k].second},
                              fmt::format("flows {} and {} overlap on {} port of site {}", spans[reach].second,
                                          spans[k].second,
                                          p.direction == PortDirection::egress ? "egress" : "ingress", p.site)});
      }
      if (spans[k].first.end > spans[reach].first.end) reach = k;
    }
  }
  return violations;
}

}  // namespace geobroker
