#include <doctest.h>

#include <vector>

#include "geobroker/errors.hpp"
#include "geobroker/model.hpp"
#include "geobroker/workload.hpp"

using namespace geobroker;

namespace {

DataCenter site(SiteId id, double C, double b_in, double b_out, double P, double q_in, double q_out) {
  return DataCenter{id, C, b_in, b_out, P, q_in, q_out};
}

Job job(JobId id, double a, double b, double l, double d, SiteId home) {
  return Job{id, a, b, l, d, home};
}

}  // namespace

TEST_CASE("job_cost charges energy at the target and network only when remote") {
  const DataCenter home = site(0, 1, 1, 1, 99, 0, 10);
  const DataCenter target = site(1, 1, 1, 1, 10, 5, 0);
  const Job j = job(0, 0, 10, 6, 10, 0);

  const JobCost remote = job_cost(j, target, home, true);
  CHECK(remote.energy == doctest::Approx(60));
  CHECK(remote.network == doctest::Approx(150));

  const JobCost local = job_cost(j, target, home, false);
  CHECK(local.energy == doctest::Approx(60));
  CHECK(local.network == 0.0);

  Job empty = j;
  empty.workload = 0;
  const JobCost zero = job_cost(empty, target, home, false);
  CHECK(zero.total() == 0.0);
}

TEST_CASE("comp_time sums workloads over capacity") {
  const DataCenter s = site(0, 3, 1, 1, 0, 0, 0);
  CHECK(comp_time(std::vector<double>{6}, s) == doctest::Approx(2));
  CHECK(comp_time(std::vector<double>{}, s) == 0.0);
  CHECK(comp_time(std::vector<double>{6, 3}, s) == doctest::Approx(3));
}

TEST_CASE("transfer_time uses the bottleneck of home egress and target ingress") {
  const Job j = job(0, 0, 10, 1, 10, 0);
  CHECK(transfer_time(j, site(0, 1, 1, 5, 0, 0, 0), site(1, 1, 10, 1, 0, 0, 0)) == doctest::Approx(2));
  CHECK(transfer_time(j, site(0, 1, 1, 5, 0, 0, 0), site(1, 1, 2, 1, 0, 0, 0)) == doctest::Approx(5));
  const DataCenter home = site(0, 1, 1, 5, 0, 0, 0);
  CHECK(transfer_time(j, home, home) == 0.0);
}

TEST_CASE("transfer_time times bottleneck rate recovers the data size") {
  const Scenario s = generate_scenario(6, 200, {}, 7);
  for (const Job& j : s.jobs) {
    for (const DataCenter& target : s.sites) {
      if (target.id == j.home_site) continue;
      const DataCenter& home = s.sites[j.home_site];
      CHECK(transfer_time(j, home, target) * std::min(home.bw_out, target.bw_in) ==
            doctest::Approx(j.data_size).epsilon(1e-12));
    }
  }
}

TEST_CASE("total_cost groups admitted jobs by target site") {
  Scenario s;
  s.sites = {site(0, 1, 1, 1, 20, 0, 10), site(1, 1, 1, 1, 10, 5, 0)};
  s.jobs = {job(0, 0, 10, 6, 10, 0), job(1, 0, 10, 6, 10, 1), job(2, 0, 10, 6, 10, 1)};

  std::vector<JobOutcome> outcomes(3);
  for (JobId j = 0; j < 3; ++j) outcomes[j].job_id = j;
  outcomes[0].assignment = {0, 1, true};
  outcomes[1].assignment = {1, 1, false};
  outcomes[2].assignment = {2, 1, false};

  SUBCASE("one admitted local job") {
    outcomes[0].verdict = Rejection::no_feasible_window;
    outcomes[2].verdict = Rejection::no_feasible_window;
    CHECK(total_cost(s, outcomes).total == doctest::Approx(60));
  }
  SUBCASE("remote plus local") {
    outcomes[2].verdict = Rejection::no_feasible_window;
    const CostReport report = total_cost(s, outcomes);
    CHECK(report.total == doctest::Approx(270));
    CHECK(report.per_site[0].energy == 0.0);
    CHECK(report.per_site[1].energy == doctest::Approx(120));
    CHECK(report.per_site[1].network == doctest::Approx(150));
  }
  SUBCASE("all rejected") {
    for (auto& o : outcomes) o.verdict = Rejection::pruned_transfer;
    CHECK(total_cost(s, outcomes).total == 0.0);
  }
}

TEST_CASE("total_cost is additive over any partition of the admitted jobs") {
  const Scenario s = generate_scenario(5, 60, {}, 11);
  Rng rng(3);
  std::vector<JobOutcome> outcomes(s.jobs.size());
  double expected = 0.0;
  for (const Job& j : s.jobs) {
    JobOutcome& o = outcomes[j.id];
    o.job_id = j.id;
    o.assignment = make_assignment(j, rng.index(s.sites.size()));
    o.verdict = rng.uniform01() < 0.3 ? Rejection::transfer_conflict : Rejection::none;
    if (o.admitted()) {
      expected += job_cost(j, s.sites[o.assignment.target_site], s.sites[j.home_site], o.assignment.is_remote)
                      .total();
    }
  }
  const CostReport report = total_cost(s, outcomes);
  CHECK(report.total == doctest::Approx(expected).epsilon(1e-12));
  CHECK(report.energy() + report.network() == doctest::Approx(report.total).epsilon(1e-12));
  for (const SiteCost& c : report.per_site) {
    CHECK(c.energy >= 0.0);
    CHECK(c.network >= 0.0);
  }
}

TEST_CASE("scenario validation rejects broken invariants") {
  Scenario s;
  s.sites = {site(0, 1, 1, 1, 1, 1, 1)};
  s.jobs = {job(0, 0, 10, 1, 1, 0)};
  CHECK_NOTHROW(validate(s));

  Scenario bad = s;
  bad.jobs[0].deadline = 0;
  CHECK_THROWS_AS(validate(bad), ScenarioError);

  bad = s;
  bad.jobs[0].home_site = 3;
  CHECK_THROWS_AS(validate(bad), ScenarioError);

  bad = s;
  bad.sites[0].bw_in = 0;
  CHECK_THROWS_AS(validate(bad), ScenarioError);

  bad = s;
  bad.sites[0].net_price_out = -1;
  CHECK_THROWS_AS(validate(bad), ScenarioError);

  bad = s;
  bad.jobs[0].id = 4;
  CHECK_THROWS_AS(validate(bad), ScenarioError);

  bad = s;
  bad.jobs[0].workload = 0;
  CHECK_THROWS_AS(validate(bad), ScenarioError);
}

TEST_CASE("overlap of intervals") {
  CHECK(overlap({0, 4}, {2, 6}) == 2.0);
  CHECK(overlap({0, 4}, {4, 6}) == 0.0);
  CHECK(overlap({0, 4}, {5, 6}) == 0.0);
  CHECK(overlap({0, 10}, {2, 3}) == 1.0);
}
