#pragma once

#include "geobroker/model.hpp"

namespace geobroker::testing {

// One job at S0 worth moving to S1: local cost 6 * 20 = 120, remote
// 6 * 5 + 10 * (0.5 + 0.5) = 40. S1 needs 6/3 + 10/min(5, 10) = 4 of the
// 10 time units available.
inline Scenario remote_beneficial() {
  Scenario s;
  s.sites = {DataCenter{0, 1, 10, 5, 20, 1, 0.5}, DataCenter{1, 3, 10, 1, 5, 0.5, 1}};
  s.jobs = {Job{0, 0, 10, 6, 10, 0}};
  return s;
}

// Identical sites, so no move is ever cheaper, and every job has room.
inline Scenario all_local() {
  Scenario s;
  s.sites = {DataCenter{0, 2, 1, 1, 3, 1, 1}, DataCenter{1, 2, 1, 1, 3, 1, 1}};
  s.jobs = {Job{0, 0, 10, 2, 5, 0}, Job{1, 5, 20, 4, 5, 1}, Job{2, 12, 30, 2, 5, 0}};
  return s;
}

// Two jobs that together need 12 time units on a single site with a
// window of 10.
inline Scenario overloaded() {
  Scenario s;
  s.sites = {DataCenter{0, 1, 1, 1, 1, 1, 1}};
  s.jobs = {Job{0, 0, 10, 6, 1, 0}, Job{1, 0, 10, 6, 1, 0}};
  return s;
}

}  // namespace geobroker::testing
