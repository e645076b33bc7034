#include "geobroker/timeline.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace geobroker {

SiteTimeline::SiteTimeline(Interval horizon) : horizon_(horizon) {
  if (horizon.end < horizon.start) {
    throw std::invalid_argument("timeline horizon must satisfy start <= end");
  }
}

void SiteTimeline::mark_busy(Interval span) {
  if (span.end < span.start) {
    throw std::logic_error("busy span must satisfy start <= end");
  }
  if (span.length() <= 0.0) return;
  if (!horizon_.contains(span)) {
    throw std::logic_error(fmt::format("busy span [{}, {}] leaves horizon [{}, {}]", span.start,
                                       span.end, horizon_.start, horizon_.end));
  }
  if (auto clash = first_conflict(span)) {
    throw std::logic_error(fmt::format("busy span [{}, {}] overlaps [{}, {}]", span.start, span.end,
                                       clash->start, clash->end));
  }
  auto pos = std::lower_bound(busy_.begin(), busy_.end(), span,
                              [](const Interval& a, const Interval& b) { return a.start < b.start; });
  pos = busy_.insert(pos, span);
  // Coalesce with touching neighbours.
  if (pos + 1 != busy_.end() && (pos + 1)->start <= pos->end + kEpsilon) {
    pos->end = std::max(pos->end, (pos + 1)->end);
    busy_.erase(pos + 1);
  }
  if (pos != busy_.begin() && (pos - 1)->end >= pos->start - kEpsilon) {
    (pos - 1)->end = std::max((pos - 1)->end, pos->end);
    busy_.erase(pos);
  }
}

double SiteTimeline::busy_time(const Interval& query) const {
  auto it = std::upper_bound(busy_.begin(), busy_.end(), query.start,
                             [](double t, const Interval& b) { return t < b.end; });
  double total = 0.0;
  for (; it != busy_.end() && it->start < query.end; ++it) {
    total += overlap(*it, query);
  }
  return total;
}

double SiteTimeline::free_time(const Interval& query) const {
  return std::max(0.0, overlap(horizon_, query) - busy_time(query));
}

bool SiteTimeline::is_free(const Interval& query) const {
  return !first_conflict(query).has_value();
}

std::optional<Interval> SiteTimeline::first_conflict(const Interval& query) const {
  // First busy interval whose end lies beyond query.start.
  auto it = std::upper_bound(busy_.begin(), busy_.end(), query.start + kEpsilon,
                             [](double t, const Interval& b) { return t < b.end; });
  for (; it != busy_.end() && it->start < query.end - kEpsilon; ++it) {
    if (overlap(*it, query) > kEpsilon) return *it;
  }
  return std::nullopt;
}

std::optional<Interval> earliest_common_slot(const SiteTimeline& a, const SiteTimeline& b,
                                             double length, double not_before, double deadline) {
  double t = std::max({not_before, a.horizon().start, b.horizon().start});
  while (t + length <= deadline + kEpsilon) {
    const Interval probe{t, t + length};
    auto clash_a = a.first_conflict(probe);
    auto clash_b = b.first_conflict(probe);
    if (!clash_a && !clash_b) return probe;
    if (clash_a) t = std::max(t, clash_a->end);
    if (clash_b) t = std::max(t, clash_b->end);
  }
  return std::nullopt;
}

}  // namespace geobroker
