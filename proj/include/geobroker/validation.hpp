#pragma once

#include <string>
#include <vector>

#include "geobroker/model.hpp"

namespace geobroker {

/// Re-checks a schedule against the scenario alone, trusting nothing the
/// schedulers computed. For each admitted job: transfer (if remote) inside
/// [arrival, first compute start] and as long as the bottleneck transfer
/// time; compute segments inside [arrival, deadline] summing to l/C. Across
/// jobs: no two compute segments overlap on a site, no two transfers
/// overlap on a port. Booked costs must match the cost model, and a remote
/// job must cost strictly less than running it at home. Rejected jobs hold
/// no resources and cost nothing. Returns one message per violation.
std::vector<std::string> validate_result(const Scenario& scenario, const ScheduleResult& result);

}  // namespace geobroker
