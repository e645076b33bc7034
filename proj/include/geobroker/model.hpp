#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace geobroker {

using SiteId = std::size_t;
using JobId = std::size_t;

/// Absolute tolerance for every time and cost comparison.
inline constexpr double kEpsilon = 1e-9;

/// One data center: compute capacity, port bandwidths and unit prices.
struct DataCenter {
  SiteId id = 0;
  double compute_capacity = 1.0;  // workload units per time unit
  double bw_in = 1.0;             // data units per time unit, ingress
  double bw_out = 1.0;            // data units per time unit, egress
  double energy_price = 0.0;      // per workload unit
  double net_price_in = 0.0;      // per data unit received
  double net_price_out = 0.0;     // per data unit sent

  friend bool operator==(const DataCenter&, const DataCenter&) = default;
};

/// A job whose input data resides at `home_site`.
struct Job {
  JobId id = 0;
  double arrival = 0.0;
  double deadline = 0.0;
  double workload = 0.0;
  double data_size = 0.0;
  SiteId home_site = 0;

  double window() const { return deadline - arrival; }

  friend bool operator==(const Job&, const Job&) = default;
};

struct Scenario {
  std::vector<DataCenter> sites;
  std::vector<Job> jobs;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ScenarioError on the first violated invariant.
void validate(const Scenario& scenario);

struct Interval {
  double start = 0.0;
  double end = 0.0;

  double length() const { return end - start; }
  bool contains(const Interval& other) const {
    return other.start >= start - kEpsilon && other.end <= end + kEpsilon;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Length of the intersection of two intervals (0 when disjoint).
double overlap(const Interval& a, const Interval& b);

struct Assignment {
  JobId job_id = 0;
  SiteId target_site = 0;
  bool is_remote = false;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

Assignment local_assignment(const Job& job);
Assignment make_assignment(const Job& job, SiteId target);

struct JobCost {
  double energy = 0.0;
  double network = 0.0;

  double total() const { return energy + network; }
};

/// Energy is charged at the target site; network only when the data moves.
JobCost job_cost(const Job& job, const DataCenter& target, const DataCenter& home,
                 bool is_remote);

/// Minimum processing time of a batch of workloads on one site.
double comp_time(std::span<const double> workloads, const DataCenter& site);

/// Transfer time at the bottleneck rate min(home egress, target ingress).
double transfer_time(const Job& job, const DataCenter& home, const DataCenter& target);

enum class Rejection {
  none,
  no_feasible_window,
  pruned_transfer,
  transfer_conflict,
};

inline constexpr std::size_t kRejectionKinds = 4;

std::string_view to_string(Rejection reason);

struct JobOutcome {
  JobId job_id = 0;
  Rejection verdict = Rejection::none;
  Assignment assignment;
  std::optional<Interval> transfer;
  std::vector<Interval> compute_segments;
  JobCost cost;

  bool admitted() const { return verdict == Rejection::none; }
};

struct SiteCost {
  SiteId site = 0;
  double energy = 0.0;
  double network = 0.0;
};

struct CostReport {
  std::vector<SiteCost> per_site;
  double total = 0.0;

  double energy() const;
  double network() const;
};

/// Outcomes are indexed by job id.
struct ScheduleResult {
  std::vector<JobOutcome> jobs;
  CostReport cost;
};

/// Sums admitted jobs' costs grouped by target site. Rejected jobs are free.
CostReport total_cost(const Scenario& scenario, std::span<const JobOutcome> outcomes);

}  // namespace geobroker
