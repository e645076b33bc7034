#pragma once

#include <vector>

#include "geobroker/model.hpp"
#include "geobroker/rng.hpp"

namespace geobroker {

enum class SitePolicy { min_cost, random_candidate };

/// Sites other than the job's home that pass both single-job screens:
///   time: l/C_c + d/min(B_home^out, B_c^in) <= b - a
///   cost: l*P_c + d*(Q_home^out + Q_c^in) <  l*P_home   (strict)
/// Current congestion is ignored. Returned in ascending site order.
///
/// This list is the hook for extra placement filters (e.g. data residency).
std::vector<SiteId> candidate_sites(const Job& job, const Scenario& scenario);

struct CandidateSet {
  JobId job_id = 0;
  std::vector<SiteId> candidates;
  SiteId chosen = 0;
};

/// An empty candidate list keeps the job at home. min_cost breaks cost ties
/// on the lowest site id. random_candidate consumes one draw from `rng`
/// only when there is something to choose from.
Assignment select_site(const Job& job, const std::vector<SiteId>& candidates,
                       const Scenario& scenario, SitePolicy policy, Rng& rng);

/// Screens and selects every job in id order, sharing one generator.
std::vector<Assignment> assign_sites(const Scenario& scenario, SitePolicy policy, Rng& rng);

}  // namespace geobroker
