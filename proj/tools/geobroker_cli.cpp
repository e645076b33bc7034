// Command-line front end: scenario generation, single runs, multi-seed
// experiments and the brute-force oracle.
//
// Exit codes: 0 success, 1 I/O or internal failure, 2 invalid input,
// 3 oracle size limit exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "geobroker/errors.hpp"
#include "geobroker/experiment.hpp"
#include "geobroker/io.hpp"
#include "geobroker/oracle.hpp"
#include "geobroker/workload.hpp"

namespace {

using namespace geobroker;

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOracleLimit = 3;

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(fmt::format("bad seed '{}'", item));
    }
    seeds.push_back(std::stoull(item));
  }
  if (seeds.empty()) throw std::invalid_argument("no seeds given");
  return seeds;
}

PruneMetric parse_metric(const std::string& name) {
  if (name == "normalized") return PruneMetric::normalized;
  if (name == "raw") return PruneMetric::raw;
  throw std::invalid_argument(fmt::format("unknown prune metric: {}", name));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deadline-aware job placement and scheduling across geo-distributed data centers"};
  app.require_subcommand(1);

  // generate
  std::size_t gen_sites = 20, gen_jobs = 200;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Draw a random scenario");
  generate->add_option("--sites", gen_sites, "Number of data centers")->required();
  generate->add_option("--jobs", gen_jobs, "Number of jobs")->required();
  generate->add_option("--seed", gen_seed, "Generator seed")->required();
  generate->add_option("--out", gen_out, "Scenario JSON to write")->required();

  // run
  std::string run_scenario, run_policy_name = "random-candidate", run_metric = "normalized", run_out,
                            run_schedule_out;
  std::uint64_t run_seed = 0;
  bool run_recompute = false, run_no_timing = false;
  auto* run = app.add_subcommand("run", "Schedule one scenario and write a CSV row");
  run->add_option("--scenario", run_scenario, "Scenario JSON")->required();
  run->add_option("--policy", run_policy_name, "min-cost | random-candidate | baseline")
      ->check(CLI::IsMember({"min-cost", "random-candidate", "baseline"}));
  run->add_option("--seed", run_seed, "Seed for random candidate choice");
  run->add_flag("--recompute", run_recompute, "Run one extra scheduling pass");
  run->add_option("--prune-metric", run_metric, "raw | normalized")
      ->check(CLI::IsMember({"raw", "normalized"}));
  run->add_option("--out", run_out, "CSV to write")->required();
  run->add_option("--schedule-out", run_schedule_out, "Also write the full schedule as JSON");
  run->add_flag("--no-timing", run_no_timing, "Report wall time as 0 for byte-stable output");

  // experiment
  std::size_t exp_sites = 20, exp_jobs = 200;
  std::string exp_seeds = "1,2,3,4,5", exp_out, exp_policy = "random-candidate", exp_metric = "normalized";
  bool exp_recompute = false, exp_no_timing = false;
  auto* experiment = app.add_subcommand("experiment", "Compare a policy with the baseline over several seeds");
  experiment->add_option("--sites", exp_sites, "Number of data centers")->required();
  experiment->add_option("--jobs", exp_jobs, "Number of jobs")->required();
  experiment->add_option("--seeds", exp_seeds, "Comma-separated seeds")->required();
  experiment->add_option("--out", exp_out, "Output directory")->required();
  experiment->add_option("--policy", exp_policy, "min-cost | random-candidate")
      ->check(CLI::IsMember({"min-cost", "random-candidate"}));
  experiment->add_option("--prune-metric", exp_metric, "raw | normalized")
      ->check(CLI::IsMember({"raw", "normalized"}));
  experiment->add_flag("--recompute", exp_recompute, "Run one extra scheduling pass");
  experiment->add_flag("--no-timing", exp_no_timing, "Report wall time as 0 for byte-stable output");

  // oracle
  std::string oracle_scenario;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum-cost feasible assignment (small instances)");
  oracle->add_option("--scenario", oracle_scenario, "Scenario JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*generate) {
      const Scenario scenario = generate_scenario(gen_sites, gen_jobs, DistributionConfig{}, gen_seed);
      save_scenario(scenario, gen_out);
      fmt::print("wrote {} sites and {} jobs to {}\n", gen_sites, gen_jobs, gen_out);
    } else if (*run) {
      const Scenario scenario = load_scenario(run_scenario);
      PipelineOptions options;
      options.seed = run_seed;
      options.recompute = run_recompute;
      options.prune_metric = parse_metric(run_metric);
      const Policy policy = parse_policy(run_policy_name);
      PolicyRun result = run_policy(scenario, policy, options);
      if (run_no_timing) result.proposed.metrics.wall_time = 0.0;

      auto out = open_output(run_out);
      out << kCsvHeader << '\n';
      write_csv_row(out, std::to_string(run_seed), policy, result.proposed.metrics, result.norm_admission,
                    result.norm_cost);
      if (!run_schedule_out.empty()) {
        auto schedule = open_output(run_schedule_out);
        schedule << schedule_to_json(result.proposed.result) << '\n';
      }
      const RunMetrics& m = result.proposed.metrics;
      fmt::print("{}: admitted {}/{} ({:.4f}), total cost {:.4f}\n", to_string(policy), m.admitted, m.total,
                 m.admission_rate, m.total_cost);
    } else if (*experiment) {
      ExperimentConfig config;
      config.num_sites = exp_sites;
      config.num_jobs = exp_jobs;
      config.seeds = parse_seeds(exp_seeds);
      config.policy = parse_policy(exp_policy);
      config.prune_metric = parse_metric(exp_metric);
      config.recompute = exp_recompute;
      config.record_timing = !exp_no_timing;
      const ComparisonReport report = run_experiment(config);

      std::filesystem::create_directories(exp_out);
      const auto path = std::filesystem::path(exp_out) / "results.csv";
      auto out = open_output(path);
      write_comparison_csv(out, report);
      fmt::print("{} seeds, mean normalized admission {:.4f}, mean normalized cost {:.4f}; wrote {}\n",
                 report.rows.size(), report.mean_norm_admission, report.mean_norm_cost, path.string());
    } else if (*oracle) {
      const Scenario scenario = load_scenario(oracle_scenario);
      const OracleResult result = brute_force_oracle(scenario);
      if (!result.feasible) {
        fmt::print("infeasible\n");
      } else {
        fmt::print("feasible, minimum cost {}\nassignment:", result.best_cost);
        for (SiteId s : result.best_assignment) fmt::print(" {}", s);
        fmt::print("\n");
      }
    }
  } catch (const OracleLimitError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitOracleLimit;
  } catch (const ScenarioError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitFailure;
  }
  return 0;
}
