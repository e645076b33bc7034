#include <doctest.h>

#include <vector>

#include "geobroker/site_selection.hpp"
#include "geobroker/workload.hpp"

using namespace geobroker;

namespace {

// Home S0 runs the job for 120. S1 costs 40 and fits the window; S2 is
// cheap but its ingress is too slow.
Scenario worked_example() {
  Scenario s;
  s.sites = {
      DataCenter{0, 1, 10, 5, 20, 1, 0.5},
      DataCenter{1, 3, 10, 1, 5, 0.5, 1},
      DataCenter{2, 1, 2, 1, 1, 0.1, 1},
  };
  s.jobs = {Job{0, 0, 10, 6, 10, 0}};
  return s;
}

}  // namespace

TEST_CASE("candidate screens on the worked example") {
  const Scenario s = worked_example();
  const Job& j = s.jobs[0];
  // S1: time 6/3 + 10/min(5, 10) = 4 <= 10, cost 30 + 10 * (0.5 + 0.5) = 40 < 120.
  CHECK(job_cost(j, s.sites[1], s.sites[0], true).total() == doctest::Approx(40));
  // S2: time 6/1 + 10/2 = 11 > 10.
  CHECK(comp_time(std::vector<double>{j.workload}, s.sites[2]) + transfer_time(j, s.sites[0], s.sites[2]) ==
        doctest::Approx(11));
  CHECK(candidate_sites(j, s) == std::vector<SiteId>{1});
}

TEST_CASE("the cost screen is strict") {
  Scenario s = worked_example();
  // Make S1 cost exactly the local 120.
  s.sites[1].energy_price = (120.0 - 10.0) / 6.0;
  CHECK(job_cost(s.jobs[0], s.sites[1], s.sites[0], true).total() == doctest::Approx(120));
  CHECK(candidate_sites(s.jobs[0], s).empty());
}

TEST_CASE("the time screen admits an exact fit") {
  Scenario s = worked_example();
  s.jobs[0].deadline = 4;  // S1 needs exactly 4
  s.sites[0].compute_capacity = 100;
  CHECK(candidate_sites(s.jobs[0], s) == std::vector<SiteId>{1});
  s.jobs[0].deadline = 3.9;
  CHECK(candidate_sites(s.jobs[0], s).empty());
}

TEST_CASE("no candidate keeps the job at home without consuming a draw") {
  const Scenario s = worked_example();
  Rng rng(1);
  Rng untouched(1);
  const Assignment a = select_site(s.jobs[0], {}, s, SitePolicy::random_candidate, rng);
  CHECK(a.target_site == 0);
  CHECK_FALSE(a.is_remote);
  CHECK(rng.next() == untouched.next());
}

TEST_CASE("min-cost picks the cheapest candidate and breaks ties on id") {
  Scenario s = worked_example();
  s.sites.push_back(DataCenter{3, 3, 10, 1, 5, 0.5, 1});  // same cost as S1
  s.sites.push_back(DataCenter{4, 3, 10, 1, 4, 0.5, 1});  // cheaper
  Rng rng(0);
  CHECK(select_site(s.jobs[0], {1, 3}, s, SitePolicy::min_cost, rng).target_site == 1);
  CHECK(select_site(s.jobs[0], {1, 3, 4}, s, SitePolicy::min_cost, rng).target_site == 4);
}

TEST_CASE("random-candidate is uniform over the candidates") {
  Scenario s = worked_example();
  s.sites.push_back(DataCenter{3, 3, 10, 1, 5, 0.5, 1});
  const std::vector<SiteId> candidates{1, 3};
  int first = 0;
  constexpr int kTrials = 10000;
  for (int seed = 0; seed < kTrials; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const Assignment a = select_site(s.jobs[0], candidates, s, SitePolicy::random_candidate, rng);
    CHECK(a.is_remote);
    if (a.target_site == 1) ++first;
  }
  const double expected = kTrials / 2.0;
  const double chi2 = 2 * (first - expected) * (first - expected) / expected;
  CHECK(chi2 < 3.841);  // 95th percentile, one degree of freedom

  Rng a(77), b(77);
  CHECK(select_site(s.jobs[0], candidates, s, SitePolicy::random_candidate, a).target_site ==
        select_site(s.jobs[0], candidates, s, SitePolicy::random_candidate, b).target_site);
}

TEST_CASE("every assignment on generated scenarios passes both screens") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Scenario s = generate_scenario(20, 200, {}, seed);
    for (SitePolicy policy : {SitePolicy::min_cost, SitePolicy::random_candidate}) {
      Rng rng(seed);
      const auto assignments = assign_sites(s, policy, rng);
      REQUIRE(assignments.size() == s.jobs.size());
      for (const Job& j : s.jobs) {
        const Assignment& a = assignments[j.id];
        CHECK(a.job_id == j.id);
        CHECK(a.is_remote == (a.target_site != j.home_site));
        if (!a.is_remote) continue;
        const DataCenter& home = s.sites[j.home_site];
        const DataCenter& target = s.sites[a.target_site];
        CHECK(j.workload / target.compute_capacity + transfer_time(j, home, target) <=
              j.deadline - j.arrival + kEpsilon);
        CHECK(job_cost(j, target, home, true).total() < job_cost(j, home, home, false).total());
        if (policy == SitePolicy::min_cost) {
          for (SiteId c : candidate_sites(j, s)) {
            CHECK(job_cost(j, target, home, true).total() <= job_cost(j, s.sites[c], home, true).total());
          }
        }
      }
    }
  }
}
