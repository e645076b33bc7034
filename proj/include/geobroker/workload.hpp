#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include "geobroker/model.hpp"
#include "geobroker/rng.hpp"

namespace geobroker {

/// Uniform(lo, hi) or Normal(mean, stddev). Draws below `floor` are
/// redrawn; a floor of -inf disables truncation.
struct Distribution {
  enum class Kind { uniform, normal };

  Kind kind = Kind::uniform;
  double a = 0.0;  // lo or mean
  double b = 1.0;  // hi or stddev
  double floor = -std::numeric_limits<double>::infinity();

  static Distribution uniform(double lo, double hi, double floor = -std::numeric_limits<double>::infinity()) {
    return {Kind::uniform, lo, hi, floor};
  }
  static Distribution normal(double mean, double stddev, double floor) {
    return {Kind::normal, mean, stddev, floor};
  }

  /// Throws std::invalid_argument for bad parameters or an empty support.
  void check() const;

  double sample(Rng& rng) const;
};

inline constexpr double kTruncationFloor = 0.1;

/// Default distribution for every generated quantity.
struct DistributionConfig {
  Distribution compute_capacity = Distribution::uniform(1, 9, kTruncationFloor);
  Distribution bw_out = Distribution::uniform(1, 5, kTruncationFloor);
  Distribution bw_in = Distribution::uniform(1, 10, kTruncationFloor);
  Distribution energy_price = Distribution::normal(10, 3, kTruncationFloor);
  Distribution net_price_out = Distribution::normal(10, 3, kTruncationFloor);
  Distribution net_price_in = Distribution::normal(5, 3, kTruncationFloor);
  Distribution time = Distribution::uniform(1, 100);
  Distribution data_size = Distribution::normal(10, 5, kTruncationFloor);
  Distribution workload = Distribution::normal(6, 5, kTruncationFloor);

  void check() const;
};

/// Draw order: every site (C, B_out, B_in, P, Q_out, Q_in), then every job
/// (two times, data size, workload, home site). Arrival and deadline are the
/// min and max of the two time draws; equal draws are redrawn.
Scenario generate_scenario(std::size_t num_sites, std::size_t num_jobs,
                           const DistributionConfig& config, std::uint64_t seed);

}  // namespace geobroker
