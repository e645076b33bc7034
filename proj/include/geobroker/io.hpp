#pragma once

#include <filesystem>
#include <string>

#include "geobroker/model.hpp"

namespace geobroker {

/// Scenario JSON:
///   {"sites": [{"id","C","B_in","B_out","P","Q_in","Q_out"}, ...],
///    "jobs":  [{"id","a","b","l","d","home"}, ...],
///    "seed": <integer, optional>}
/// Unknown keys are rejected. Parse and schema problems raise ScenarioError
/// naming the offending field; the parsed scenario is then validated.
Scenario scenario_from_json(const std::string& text);
std::string scenario_to_json(const Scenario& scenario);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// Canonical serialization; identical results give identical bytes.
std::string schedule_to_json(const ScheduleResult& result);

}  // namespace geobroker
