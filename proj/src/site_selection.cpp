#include "geobroker/site_selection.hpp"

#include <algorithm>

namespace geobroker {

std::vector<SiteId> candidate_sites(const Job& job, const Scenario& scenario) {
  const DataCenter& home = scenario.sites.at(job.home_site);
  const double local_energy = job.workload * home.energy_price;
  std::vector<SiteId> result;
  for (const DataCenter& site : scenario.sites) {
    if (site.id == home.id) continue;
    const double busy = job.workload / site.compute_capacity + transfer_time(job, home, site);
    if (busy > job.window() + kEpsilon) continue;
    const JobCost remote = job_cost(job, site, home, true);
    if (!(remote.total() < local_energy - kEpsilon)) continue;
    result.push_back(site.id);
  }
  return result;
}

Assignment select_site(const Job& job, const std::vector<SiteId>& candidates,
                       const Scenario& scenario, SitePolicy policy, Rng& rng) {
  if (candidates.empty()) return local_assignment(job);

  if (policy == SitePolicy::random_candidate) {
    return make_assignment(job, candidates[rng.index(candidates.size())]);
  }

  const DataCenter& home = scenario.sites.at(job.home_site);
  SiteId best = candidates.front();
  double best_cost = job_cost(job, scenario.sites.at(best), home, true).total();
  for (SiteId c : candidates) {
    const double cost = job_cost(job, scenario.sites.at(c), home, true).total();
    if (cost < best_cost - kEpsilon || (cost <= best_cost + kEpsilon && c < best)) {
      best = c;
      best_cost = cost;
    }
  }
  return make_assignment(job, best);
}

std::vector<Assignment> assign_sites(const Scenario& scenario, SitePolicy policy, Rng& rng) {
  std::vector<Assignment> out;
  out.reserve(scenario.jobs.size());
  for (const Job& job : scenario.jobs) {
    out.push_back(select_site(job, candidate_sites(job, scenario), scenario, policy, rng));
  }
  return out;
}

}  // namespace geobroker
