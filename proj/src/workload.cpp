#include "geobroker/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geobroker {

void Distribution::check() const {
  if (kind == Kind::uniform) {
    if (!(a < b)) throw std::invalid_argument("uniform distribution needs lo < hi");
    if (b <= floor) throw std::invalid_argument("uniform distribution lies entirely below its truncation floor");
  } else {
    if (!(b > 0.0)) throw std::invalid_argument("normal distribution needs stddev > 0");
    // Redrawing would practically never terminate this far out in the tail.
    if (a + 8.0 * b < floor) throw std::invalid_argument("normal distribution lies entirely below its truncation floor");
  }
}

double Distribution::sample(Rng& rng) const {
  for (;;) {
    const double x = kind == Kind::uniform ? rng.uniform(a, b) : rng.normal(a, b);
    if (x >= floor) return x;
  }
}

void DistributionConfig::check() const {
  for (const Distribution* d : {&compute_capacity, &bw_out, &bw_in, &energy_price, &net_price_out,
                                &net_price_in, &time, &data_size, &workload}) {
    d->check();
  }
  for (const Distribution* d : {&compute_capacity, &bw_out, &bw_in, &workload}) {
    if (!(d->floor > 0.0)) throw std::invalid_argument("capacities and workloads need a positive truncation floor");
  }
  for (const Distribution* d : {&energy_price, &net_price_out, &net_price_in, &data_size}) {
    if (!(d->floor >= 0.0)) throw std::invalid_argument("prices and data sizes need a non-negative truncation floor");
  }
}

Scenario generate_scenario(std::size_t num_sites, std::size_t num_jobs,
                           const DistributionConfig& config, std::uint64_t seed) {
  if (num_sites == 0) throw std::invalid_argument("a scenario needs at least one site");
  config.check();

  Rng rng(seed);
  Scenario scenario;
  scenario.seed = seed;
  scenario.sites.reserve(num_sites);
  for (std::size_t i = 0; i < num_sites; ++i) {
    DataCenter site;
    site.id = i;
    site.compute_capacity = config.compute_capacity.sample(rng);
    site.bw_out = config.bw_out.sample(rng);
    site.bw_in = config.bw_in.sample(rng);
    site.energy_price = config.energy_price.sample(rng);
    site.net_price_out = config.net_price_out.sample(rng);
    site.net_price_in = config.net_price_in.sample(rng);
    scenario.sites.push_back(site);
  }

  scenario.jobs.reserve(num_jobs);
  for (std::size_t j = 0; j < num_jobs; ++j) {
    Job job;
    job.id = j;
    double t1 = config.time.sample(rng);
    double t2 = config.time.sample(rng);
    while (t1 == t2) {
      t1 = config.time.sample(rng);
      t2 = config.time.sample(rng);
    }
    job.arrival = std::min(t1, t2);
    job.deadline = std::max(t1, t2);
    job.data_size = config.data_size.sample(rng);
    job.workload = config.workload.sample(rng);
    job.home_site = rng.index(num_sites);
    scenario.jobs.push_back(job);
  }
  return scenario;
}

}  // namespace geobroker
