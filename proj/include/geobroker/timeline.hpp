#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geobroker/model.hpp"

namespace geobroker {

/// Busy/free bookkeeping for one resource (a compute machine or a port)
/// over a fixed horizon. Busy intervals are kept sorted, disjoint, and
/// coalesced when they touch.
class SiteTimeline {
 public:
  SiteTimeline() = default;
  explicit SiteTimeline(Interval horizon);

  const Interval& horizon() const { return horizon_; }
  std::span<const Interval> busy() const { return busy_; }

  /// Throws std::logic_error if `span` leaves the horizon or overlaps
  /// time already marked busy.
  void mark_busy(Interval span);

  double busy_time(const Interval& query) const;

  /// Horizon time inside `query` that is not busy.
  double free_time(const Interval& query) const;

  bool is_free(const Interval& query) const;

  /// First busy interval that overlaps `query` by more than the tolerance.
  std::optional<Interval> first_conflict(const Interval& query) const;

 private:
  Interval horizon_;
  std::vector<Interval> busy_;
};

/// Earliest span of `length` free on both timelines, starting at or after
/// `not_before` and ending no later than `deadline`.
std::optional<Interval> earliest_common_slot(const SiteTimeline& a, const SiteTimeline& b,
                                             double length, double not_before, double deadline);

}  // namespace geobroker
