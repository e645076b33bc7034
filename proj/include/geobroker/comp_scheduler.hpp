#pragma once

#include <map>
#include <span>
#include <vector>

#include "geobroker/model.hpp"
#include "geobroker/timeline.hpp"

namespace geobroker {

/// A job on the mirrored time axis t' = T - t, where T is the latest
/// deadline at the site. Deadlines become releases, so finishing early in
/// reversed time means starting late in forward time.
struct ReversedJob {
  JobId job_id = 0;
  double rev_arrival = 0.0;   // T - b_j
  double rev_deadline = 0.0;  // T - (a_j + lead_j)
  double proc = 0.0;          // l_j / C_i
};

struct ReversedInstance {
  double mirror = 0.0;  // T
  std::vector<ReversedJob> jobs;
};

/// `transfer_lead`, when given, holds one entry per job: time that must
/// remain between the job's arrival and its computation start (the minimal
/// transfer time of a remote job, 0 for local ones).
ReversedInstance reverse_transform(std::span<const Job> jobs, const DataCenter& site,
                                   std::span<const double> transfer_lead = {});

struct JobSegments {
  JobId job_id = 0;
  std::vector<Interval> segments;  // ascending, non-overlapping

  double start() const { return segments.front().start; }
  double end() const { return segments.back().end; }
};

/// Plain preemptive shortest-remaining-time-first on one unit-rate machine.
/// Preemption happens only at releases and completions; ties on remaining
/// time go to the lowest job id. No deadlines are enforced. Segments are in
/// the reversed time frame, one entry per input job in input order.
std::vector<JobSegments> srpt(std::span<const ReversedJob> jobs);

struct CompSchedule {
  std::vector<JobSegments> admitted;  // forward time, ascending job id
  std::vector<JobId> rejected;        // ascending job id
  SiteTimeline machine;
};

/// SRPT on the reversed instance, mirrored back to forward time. SRPT
/// ignores deadlines, so when it overruns one the set is retried with
/// preemptive EDF, which fits every feasible set; that schedule is used if
/// it meets all deadlines. Otherwise the job with the largest SRPT overrun
/// (then lowest id) is rejected and the remainder rescheduled.
CompSchedule srtf_schedule(const ReversedInstance& instance);

/// Latest feasible computation start per admitted job.
std::map<JobId, double> latest_start_times(const CompSchedule& schedule);

/// Non-preemptive baseline: jobs in arrival order (ties: earlier deadline,
/// then id), each started as soon as the machine is free. A job that would
/// finish past its deadline is rejected and does not occupy the machine.
CompSchedule fcfs_edf_schedule(std::span<const Job> jobs, const DataCenter& site);

}  // namespace geobroker
