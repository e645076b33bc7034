#include "geobroker/comp_scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace geobroker {
namespace {

void append_segment(std::vector<Interval>& segments, double from, double to) {
  if (!segments.empty() && segments.back().end >= from - kEpsilon) {
    segments.back().end = to;
  } else {
    segments.push_back({from, to});
  }
}

enum class Priority { shortest_remaining, earliest_deadline };

/// Event-driven preemptive single-machine simulation. The ready job with
/// the smallest key (remaining time or deadline, then job id) runs.
std::vector<JobSegments> simulate(std::span<const ReversedJob> jobs, Priority priority) {
  const std::size_t n = jobs.size();
  std::vector<JobSegments> result(n);
  std::vector<double> remaining(n);
  for (std::size_t i = 0; i < n; ++i) {
    result[i].job_id = jobs[i].job_id;
    remaining[i] = jobs[i].proc;
  }
  auto key = [&](std::size_t i) {
    return priority == Priority::shortest_remaining ? remaining[i] : jobs[i].rev_deadline;
  };

  std::vector<std::size_t> by_release(n);
  std::iota(by_release.begin(), by_release.end(), 0);
  std::sort(by_release.begin(), by_release.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(jobs[x].rev_arrival, jobs[x].job_id) < std::tie(jobs[y].rev_arrival, jobs[y].job_id);
  });

  // (key, job id, index): begin() is the job to run.
  std::set<std::tuple<double, JobId, std::size_t>> ready;
  std::size_t next = 0;
  double now = n ? jobs[by_release[0]].rev_arrival : 0.0;

  while (next < n || !ready.empty()) {
    if (ready.empty()) now = std::max(now, jobs[by_release[next]].rev_arrival);
    while (next < n && jobs[by_release[next]].rev_arrival <= now + kEpsilon) {
      const std::size_t i = by_release[next++];
      ready.emplace(key(i), jobs[i].job_id, i);
    }

    const std::size_t i = std::get<2>(*ready.begin());
    ready.erase(ready.begin());
    const double next_release =
        next < n ? jobs[by_release[next]].rev_arrival : std::numeric_limits<double>::infinity();

    if (next_release - now >= remaining[i] - kEpsilon) {
      append_segment(result[i].segments, now, now + remaining[i]);
      now += remaining[i];
      remaining[i] = 0.0;
    } else {
      append_segment(result[i].segments, now, next_release);
      remaining[i] -= next_release - now;
      now = next_release;
      ready.emplace(key(i), jobs[i].job_id, i);
    }
  }
  return result;
}

bool meets_deadlines(std::span<const ReversedJob> jobs, std::span<const JobSegments> schedule) {
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (schedule[i].end() > jobs[i].rev_deadline + kEpsilon) return false;
  }
  return true;
}

}  // namespace

ReversedInstance reverse_transform(std::span<const Job> jobs, const DataCenter& site,
                                   std::span<const double> transfer_lead) {
  if (!transfer_lead.empty() && transfer_lead.size() != jobs.size()) {
    throw std::invalid_argument("transfer_lead must be empty or match the job list");
  }
  ReversedInstance out;
  if (jobs.empty()) return out;
  out.mirror = std::max_element(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) {
                 return x.deadline < y.deadline;
               })->deadline;
  out.jobs.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& job = jobs[i];
    const double lead = transfer_lead.empty() ? 0.0 : transfer_lead[i];
    out.jobs.push_back({job.id, out.mirror - job.deadline, out.mirror - (job.arrival + lead),
                        job.workload / site.compute_capacity});
  }
  return out;
}

std::vector<JobSegments> srpt(std::span<const ReversedJob> jobs) {
  return simulate(jobs, Priority::shortest_remaining);
}

CompSchedule srtf_schedule(const ReversedInstance& instance) {
  CompSchedule out;
  std::vector<ReversedJob> active = instance.jobs;
  std::vector<JobSegments> reversed;

  for (;;) {
    reversed = srpt(active);
    if (meets_deadlines(active, reversed)) break;
    // SRPT ignores deadlines. Preemptive EDF decides feasibility exactly, so
    // only drop a job when even EDF cannot fit the whole set.
    if (auto edf = simulate(active, Priority::earliest_deadline); meets_deadlines(active, edf)) {
      reversed = std::move(edf);
      break;
    }
    std::size_t worst = active.size();
    double worst_overrun = 0.0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const double overrun = reversed[i].end() - active[i].rev_deadline;
      if (overrun <= kEpsilon) continue;
      const bool tie = worst < active.size() && std::abs(overrun - worst_overrun) <= kEpsilon;
      if (worst == active.size() || (!tie && overrun > worst_overrun) ||
          (tie && active[i].job_id < active[worst].job_id)) {
        worst = i;
        worst_overrun = overrun;
      }
    }
    if (worst == active.size()) break;
    out.rejected.push_back(active[worst].job_id);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(worst));
  }

  const double mirror = instance.mirror;
  double earliest = 0.0;
  for (const ReversedJob& job : instance.jobs) earliest = std::min(earliest, mirror - job.rev_deadline);
  out.machine = SiteTimeline(Interval{earliest, mirror});

  for (const JobSegments& rev : reversed) {
    JobSegments fwd;
    fwd.job_id = rev.job_id;
    for (auto it = rev.segments.rbegin(); it != rev.segments.rend(); ++it) {
      fwd.segments.push_back({mirror - it->end, mirror - it->start});
    }
    out.admitted.push_back(std::move(fwd));
  }
  for (const JobSegments& job : out.admitted) {
    for (const Interval& s : job.segments) out.machine.mark_busy(s);
  }
  std::sort(out.admitted.begin(), out.admitted.end(),
            [](const JobSegments& x, const JobSegments& y) { return x.job_id < y.job_id; });
  std::sort(out.rejected.begin(), out.rejected.end());
  return out;
}

std::map<JobId, double> latest_start_times(const CompSchedule& schedule) {
  std::map<JobId, double> starts;
  for (const JobSegments& job : schedule.admitted) starts.emplace(job.job_id, job.start());
  return starts;
}

CompSchedule fcfs_edf_schedule(std::span<const Job> jobs, const DataCenter& site) {
  CompSchedule out;
  if (jobs.empty()) return out;

  std::vector<const Job*> order;
  double horizon_start = jobs.front().arrival;
  double horizon_end = jobs.front().deadline;
  for (const Job& job : jobs) {
    order.push_back(&job);
    horizon_start = std::min(horizon_start, job.arrival);
    horizon_end = std::max(horizon_end, job.deadline);
  }
  std::sort(order.begin(), order.end(), [](const Job* x, const Job* y) {
    return std::tie(x->arrival, x->deadline, x->id) < std::tie(y->arrival, y->deadline, y->id);
  });
  out.machine = SiteTimeline(Interval{horizon_start, horizon_end});

  double free_at = horizon_start;
  for (const Job* job : order) {
    const double start = std::max(job->arrival, free_at);
    const double end = start + job->workload / site.compute_capacity;
    if (end > job->deadline + kEpsilon) {
      out.rejected.push_back(job->id);
      continue;
    }
    out.admitted.push_back({job->id, {{start, end}}});
    out.machine.mark_busy({start, end});
    free_at = end;
  }
  std::sort(out.admitted.begin(), out.admitted.end(),
            [](const JobSegments& x, const JobSegments& y) { return x.job_id < y.job_id; });
  std::sort(out.rejected.begin(), out.rejected.end());
  return out;
}

}  // namespace geobroker
