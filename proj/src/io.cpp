#include "geobroker/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

#include "geobroker/errors.hpp"

namespace geobroker {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> allowed,
                         std::string_view context) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) throw ScenarioError(fmt::format("unknown field: {}{}", context, item.key()));
  }
}

const json& require(const json& object, std::string_view key, std::string_view context) {
  auto it = object.find(std::string(key));
  if (it == object.end()) throw ScenarioError(fmt::format("missing field: {}{}", context, key));
  return *it;
}

double number(const json& object, std::string_view key, std::string_view context) {
  const json& value = require(object, key, context);
  if (!value.is_number()) throw ScenarioError(fmt::format("field {}{} must be a number", context, key));
  return value.get<double>();
}

std::size_t index(const json& object, std::string_view key, std::string_view context) {
  const json& value = require(object, key, context);
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw ScenarioError(fmt::format("field {}{} must be a non-negative integer", context, key));
  }
  return value.get<std::size_t>();
}

const json& array_field(const json& root, std::string_view key) {
  const json& value = require(root, key, "");
  if (!value.is_array()) throw ScenarioError(fmt::format("field {} must be an array", key));
  return value;
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(fmt::format("malformed JSON: {}", e.what()));
  }
  if (!root.is_object()) throw ScenarioError("scenario must be a JSON object");
  reject_unknown_keys(root, {"sites", "jobs", "seed"}, "");

  Scenario scenario;
  const json& sites = array_field(root, "sites");
  const json& jobs = array_field(root, "jobs");

  for (std::size_t i = 0; i < sites.size(); ++i) {
    const json& s = sites[i];
    const std::string ctx = fmt::format("sites[{}].", i);
    if (!s.is_object()) throw ScenarioError(fmt::format("field sites[{}] must be an object", i));
    reject_unknown_keys(s, {"id", "C", "B_in", "B_out", "P", "Q_in", "Q_out"}, ctx);
    DataCenter site;
    site.id = index(s, "id", ctx);
    site.compute_capacity = number(s, "C", ctx);
    site.bw_in = number(s, "B_in", ctx);
    site.bw_out = number(s, "B_out", ctx);
    site.energy_price = number(s, "P", ctx);
    site.net_price_in = number(s, "Q_in", ctx);
    site.net_price_out = number(s, "Q_out", ctx);
    scenario.sites.push_back(site);
  }
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const json& o = jobs[j];
    const std::string ctx = fmt::format("jobs[{}].", j);
    if (!o.is_object()) throw ScenarioError(fmt::format("field jobs[{}] must be an object", j));
    reject_unknown_keys(o, {"id", "a", "b", "l", "d", "home"}, ctx);
    Job job;
    job.id = index(o, "id", ctx);
    job.arrival = number(o, "a", ctx);
    job.deadline = number(o, "b", ctx);
    job.workload = number(o, "l", ctx);
    job.data_size = number(o, "d", ctx);
    job.home_site = index(o, "home", ctx);
    scenario.jobs.push_back(job);
  }
  if (auto it = root.find("seed"); it != root.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) throw ScenarioError("field seed must be a non-negative integer");
    scenario.seed = it->get<std::uint64_t>();
  }

  // Order in the file is irrelevant; ids decide position.
  std::sort(scenario.sites.begin(), scenario.sites.end(),
            [](const DataCenter& x, const DataCenter& y) { return x.id < y.id; });
  std::sort(scenario.jobs.begin(), scenario.jobs.end(),
            [](const Job& x, const Job& y) { return x.id < y.id; });
  validate(scenario);
  return scenario;
}

std::string scenario_to_json(const Scenario& scenario) {
  json root = json::object();
  json sites = json::array();
  for (const DataCenter& s : scenario.sites) {
    sites.push_back({{"id", s.id},
                     {"C", s.compute_capacity},
                     {"B_in", s.bw_in},
                     {"B_out", s.bw_out},
                     {"P", s.energy_price},
                     {"Q_in", s.net_price_in},
                     {"Q_out", s.net_price_out}});
  }
  json jobs = json::array();
  for (const Job& j : scenario.jobs) {
    jobs.push_back({{"id", j.id},
                    {"a", j.arrival},
                    {"b", j.deadline},
                    {"l", j.workload},
                    {"d", j.data_size},
                    {"home", j.home_site}});
  }
  root["sites"] = std::move(sites);
  root["jobs"] = std::move(jobs);
  if (scenario.seed) root["seed"] = *scenario.seed;
  return root.dump(2);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(fmt::format("cannot read scenario file {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write scenario file {}", path.string()));
  out << scenario_to_json(scenario) << '\n';
  if (!out) throw std::runtime_error(fmt::format("failed writing {}", path.string()));
}

std::string schedule_to_json(const ScheduleResult& result) {
  auto interval = [](const Interval& i) { return json::array({i.start, i.end}); };
  json jobs = json::array();
  for (const JobOutcome& o : result.jobs) {
    json segments = json::array();
    for (const Interval& s : o.compute_segments) segments.push_back(interval(s));
    jobs.push_back({{"job", o.job_id},
                    {"verdict", std::string(to_string(o.verdict))},
                    {"site", o.assignment.target_site},
                    {"remote", o.assignment.is_remote},
                    {"transfer", o.transfer ? interval(*o.transfer) : json(nullptr)},
                    {"compute", std::move(segments)},
                    {"energy", o.cost.energy},
                    {"network", o.cost.network}});
  }
  json sites = json::array();
  for (const SiteCost& s : result.cost.per_site) {
    sites.push_back({{"site", s.site}, {"energy", s.energy}, {"network", s.network}});
  }
  json root = {{"jobs", std::move(jobs)}, {"cost", {{"per_site", std::move(sites)}, {"total", result.cost.total}}}};
  return root.dump();
}

}  // namespace geobroker
