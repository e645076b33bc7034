#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "geobroker/model.hpp"

namespace geobroker {

inline constexpr std::size_t kOracleMaxJobs = 8;
inline constexpr std::size_t kOracleMaxSites = 4;

/// Sequential-capacity test for one site's load: for every non-empty
/// subset of `jobs`, total compute time plus total transfer time of its
/// remote members must fit between the subset's earliest arrival and latest
/// deadline.
bool satisfies_subset_constraints(const Scenario& scenario, SiteId site, std::span<const JobId> jobs);

struct OracleResult {
  bool feasible = false;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<SiteId> best_assignment;  // target site per job; empty if infeasible
};

/// Enumerates all sites^jobs assignments and returns the cheapest one whose
/// every site load passes satisfies_subset_constraints. Cost ties keep the
/// lexicographically smallest assignment. Throws OracleLimitError beyond
/// kOracleMaxJobs jobs or kOracleMaxSites sites.
OracleResult brute_force_oracle(const Scenario& scenario);

}  // namespace geobroker
