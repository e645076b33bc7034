#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "geobroker/rng.hpp"
#include "geobroker/workload.hpp"

using namespace geobroker;

TEST_CASE("Rng uses the standard mt19937_64 sequence") {
  // 10000th output for the default seed is fixed by the C++ standard.
  Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  CHECK(x == 9981545732273789042ULL);

  Rng a(5489);
  CHECK(a.uniform01() == static_cast<double>(14514284786278117030ULL >> 11) * 0x1.0p-53);
}

TEST_CASE("Rng variates stay in range") {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK((u >= 0.0 && u < 1.0));
    CHECK(rng.index(7) < 7u);
    CHECK(std::isfinite(rng.normal(0, 1)));
  }
}

TEST_CASE("generated scenarios respect the model invariants") {
  const Scenario s = generate_scenario(20, 200, {}, 42);
  REQUIRE(s.sites.size() == 20);
  REQUIRE(s.jobs.size() == 200);
  REQUIRE(s.seed == 42u);
  std::set<SiteId> homes;
  for (const DataCenter& dc : s.sites) {
    CHECK((dc.compute_capacity >= 1 && dc.compute_capacity <= 9));
    CHECK((dc.bw_out >= 1 && dc.bw_out <= 5));
    CHECK((dc.bw_in >= 1 && dc.bw_in <= 10));
    CHECK(dc.energy_price >= kTruncationFloor);
    CHECK(dc.net_price_in >= kTruncationFloor);
    CHECK(dc.net_price_out >= kTruncationFloor);
  }
  for (const Job& j : s.jobs) {
    CHECK(j.arrival < j.deadline);
    CHECK((j.arrival >= 1 && j.deadline <= 100));
    CHECK(j.workload >= kTruncationFloor);
    CHECK(j.data_size >= kTruncationFloor);
    CHECK(j.home_site < 20u);
    homes.insert(j.home_site);
  }
  CHECK(homes.size() > 10);
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("generation is a pure function of the seed") {
  CHECK(generate_scenario(5, 50, {}, 3) == generate_scenario(5, 50, {}, 3));
  CHECK_FALSE(generate_scenario(5, 50, {}, 3) == generate_scenario(5, 50, {}, 4));
}

TEST_CASE("zero jobs gives an empty job list") {
  const Scenario s = generate_scenario(3, 0, {}, 1);
  CHECK(s.sites.size() == 3);
  CHECK(s.jobs.empty());
}

TEST_CASE("truncated normal never draws below its floor") {
  Rng rng(8);
  const Distribution d = Distribution::normal(0, 5, kTruncationFloor);
  for (int i = 0; i < 5000; ++i) CHECK(d.sample(rng) >= kTruncationFloor);
}

TEST_CASE("sample means track the configured distributions") {
  const Scenario s = generate_scenario(2000, 4000, {}, 17);
  double c = 0, p = 0, window = 0;
  for (const DataCenter& dc : s.sites) {
    c += dc.compute_capacity;
    p += dc.energy_price;
  }
  for (const Job& j : s.jobs) window += j.deadline - j.arrival;
  CHECK(c / 2000 == doctest::Approx(5).epsilon(0.03));
  CHECK(p / 2000 == doctest::Approx(10).epsilon(0.03));
  // E|X - Y| for X, Y ~ U(1, 100) is 99 / 3.
  CHECK(window / 4000 == doctest::Approx(33).epsilon(0.03));
}

TEST_CASE("bad generator parameters are rejected") {
  DistributionConfig cfg;
  cfg.compute_capacity = Distribution::uniform(5, 1);
  CHECK_THROWS_AS(generate_scenario(2, 2, cfg, 1), std::invalid_argument);

  cfg = {};
  cfg.energy_price = Distribution::normal(10, -1, kTruncationFloor);
  CHECK_THROWS_AS(generate_scenario(2, 2, cfg, 1), std::invalid_argument);

  cfg = {};
  cfg.bw_in = Distribution::uniform(0, 0.05, kTruncationFloor);
  CHECK_THROWS_AS(generate_scenario(2, 2, cfg, 1), std::invalid_argument);

  CHECK_THROWS_AS(generate_scenario(0, 2, {}, 1), std::invalid_argument);
}
