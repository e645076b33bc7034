#include "geobroker/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include <fmt/format.h>

#include "geobroker/errors.hpp"

namespace geobroker {
namespace {

constexpr std::size_t kMaxSubsetJobs = 24;

double busy_time(const Job& job, const DataCenter& site, const DataCenter& home) {
  return job.workload / site.compute_capacity + transfer_time(job, home, site);
}

}  // namespace

bool satisfies_subset_constraints(const Scenario& scenario, SiteId site, std::span<const JobId> jobs) {
  if (jobs.size() > kMaxSubsetJobs) {
    throw OracleLimitError(fmt::format("subset check limited to {} jobs per site", kMaxSubsetJobs));
  }
  const DataCenter& target = scenario.sites.at(site);
  const std::size_t k = jobs.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    double need = 0.0;
    double earliest = std::numeric_limits<double>::infinity();
    double latest = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1u)) continue;
      const Job& job = scenario.jobs.at(jobs[i]);
      need += busy_time(job, target, scenario.sites.at(job.home_site));
      earliest = std::min(earliest, job.arrival);
      latest = std::max(latest, job.deadline);
    }
    if (need > latest - earliest + kEpsilon) return false;
  }
  return true;
}

OracleResult brute_force_oracle(const Scenario& scenario) {
  const std::size_t n = scenario.jobs.size();
  const std::size_t m = scenario.sites.size();
  if (n > kOracleMaxJobs || m > kOracleMaxSites) {
    throw OracleLimitError(fmt::format("oracle handles at most {} jobs and {} sites, got {} and {}",
                                       kOracleMaxJobs, kOracleMaxSites, n, m));
  }
  OracleResult out;
  if (n == 0) {
    out.feasible = true;
    out.best_cost = 0.0;
    return out;
  }
  if (m == 0) return out;

  // feasible[i][S]: every non-empty subset of job mask S fits on site i.
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::vector<char>> feasible(m, std::vector<char>(masks, 1));
  for (std::size_t i = 0; i < m; ++i) {
    const DataCenter& site = scenario.sites[i];
    for (std::size_t mask = 1; mask < masks; ++mask) {
      double need = 0.0;
      double earliest = std::numeric_limits<double>::infinity();
      double latest = -std::numeric_limits<double>::infinity();
      bool ok = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask >> j & 1u)) continue;
        const Job& job = scenario.jobs[j];
        need += busy_time(job, site, scenario.sites[job.home_site]);
        earliest = std::min(earliest, job.arrival);
        latest = std::max(latest, job.deadline);
        ok = ok && feasible[i][mask & ~(std::size_t{1} << j)];
      }
      feasible[i][mask] = ok && need <= latest - earliest + kEpsilon;
    }
  }

  std::vector<SiteId> assignment(n, 0);
  std::vector<std::size_t> load(m);
  for (;;) {
    std::fill(load.begin(), load.end(), 0);
    double cost = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const Job& job = scenario.jobs[j];
      load[assignment[j]] |= std::size_t{1} << j;
      cost += job_cost(job, scenario.sites[assignment[j]], scenario.sites[job.home_site],
                       assignment[j] != job.home_site)
                  .total();
    }
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = feasible[i][load[i]];
    if (ok && cost < out.best_cost - kEpsilon) {
      out.feasible = true;
      out.best_cost = cost;
      out.best_assignment = assignment;
    }

    // Next assignment in lexicographic order.
    std::size_t pos = n;
    while (pos > 0 && assignment[pos - 1] + 1 == m) assignment[--pos] = 0;
    if (pos == 0) break;
    ++assignment[pos - 1];
  }
  return out;
}

}  // namespace geobroker
