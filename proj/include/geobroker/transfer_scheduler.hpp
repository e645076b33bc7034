#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geobroker/model.hpp"
#include "geobroker/timeline.hpp"

namespace geobroker {

// The WAN is one non-blocking switch. After normalization every site
// exposes two unit-capacity ports, egress and ingress, and a transfer holds
// its source egress and destination ingress over the same span.

enum class PortDirection { egress, ingress };

struct PortId {
  SiteId site = 0;
  PortDirection direction = PortDirection::egress;

  friend bool operator==(const PortId&, const PortId&) = default;
};

/// Cross-site transfer of one remotely assigned job. `norm_size` is the
/// transfer time at the bottleneck rate; `window` runs from the job's
/// arrival to its computation start.
struct Flow {
  JobId job_id = 0;
  SiteId src = 0;
  SiteId dst = 0;
  double raw_size = 0.0;
  double norm_size = 0.0;
  Interval window;
};

bool routes_through(const Flow& flow, PortId port);

class PortTimeline {
 public:
  PortTimeline() = default;
  PortTimeline(std::size_t num_sites, Interval horizon);

  std::size_t num_sites() const { return egress_.size(); }

  SiteTimeline& at(PortId port);
  const SiteTimeline& at(PortId port) const;
  SiteTimeline& egress(SiteId site) { return egress_.at(site); }
  SiteTimeline& ingress(SiteId site) { return ingress_.at(site); }
  const SiteTimeline& egress(SiteId site) const { return egress_.at(site); }
  const SiteTimeline& ingress(SiteId site) const { return ingress_.at(site); }

 private:
  std::vector<SiteTimeline> egress_;
  std::vector<SiteTimeline> ingress_;
};

/// Fresh ports for every site over [earliest arrival, latest deadline].
PortTimeline make_ports(const Scenario& scenario);

/// One flow per remote assignment that has a computation start in
/// `dtrans_deadlines`; local or unscheduled jobs emit nothing.
std::vector<Flow> normalize_flows(const Scenario& scenario, std::span<const Assignment> assignments,
                                  const std::map<JobId, double>& dtrans_deadlines);

/// Enclosed normalized demand at `port` over its free time in `interval`.
/// Zero demand gives 0; positive demand with no free time gives +inf.
double intensity(PortId port, const Interval& interval, std::span<const Flow> flows,
                 const PortTimeline& ports);

struct CriticalInterval {
  PortId port;
  Interval interval;
  double intensity = 0.0;
  std::vector<JobId> flow_set;  // ascending job id
};

/// Highest-intensity interval at one port. Candidate intervals start at a
/// release and end at a deadline of a flow through the port; only
/// intervals enclosing at least one flow are considered. Ties: earlier
/// start, then earlier end. Empty when no flow uses the port.
std::optional<CriticalInterval> critical_interval(PortId port, std::span<const Flow> flows,
                                                  const PortTimeline& ports);

/// Maximum over all ports. Ties: earlier start, lower site id, egress
/// before ingress, earlier end. Throws std::invalid_argument on no flows.
CriticalInterval most_critical_interval(std::span<const Flow> flows, const PortTimeline& ports);

enum class PruneMetric { normalized, raw };

struct PruneResult {
  std::vector<Flow> kept;       // input order
  std::vector<JobId> rejected;  // removal order
};

/// Admission control. While the most critical interval is overloaded
/// (intensity > 1), drop from its flow set the flow with the largest
/// size / free-time-in-own-window ratio at the critical port (ties: lowest
/// job id). `metric` selects normalized or raw size in the numerator.
PruneResult prune(std::span<const Flow> flows, const PortTimeline& ports,
                  PruneMetric metric = PruneMetric::normalized);

struct TransferSchedule {
  std::map<JobId, Interval> scheduled;
  std::vector<JobId> rejected;  // ascending job id
};

/// Most-critical-first with EDF. Repeatedly takes the most critical
/// interval over the unscheduled flows and packs its flow set in deadline
/// order (ties: job id). Each flow goes into the earliest span free on both
/// endpoint ports at or after max(interval start, release). A flow with no
/// such span before its deadline is rejected. Scheduled spans are marked
/// busy on `ports`.
TransferSchedule mcf_edf(std::span<const Flow> flows, PortTimeline& ports);

struct ScheduleViolation {
  std::vector<JobId> jobs;
  std::string message;
};

/// Independent check of a transfer schedule: every scheduled flow is known,
/// lasts exactly its normalized size, fits its window, and no two flows
/// overlap on a shared port. Returns every violation found.
std::vector<ScheduleViolation> verify_schedule(const std::map<JobId, Interval>& scheduled,
                                               std::span<const Flow> flows);

}  // namespace geobroker
