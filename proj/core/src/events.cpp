#include "evframe/events.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "evframe/error.hpp"

namespace evframe {

EventStream::EventStream(SensorGeometry geometry, std::vector<Event> events)
    : geometry_(geometry), events_(std::move(events)) {}

Timestamp EventStream::first_timestamp() const {
  if (events_.empty()) throw Error("stream has no events");
  return events_.front().t;
}

Timestamp EventStream::last_timestamp() const {
  if (events_.empty()) throw Error("stream has no events");
  return events_.back().t;
}

std::vector<Violation> validate_stream(const EventStream& stream) {
  std::vector<Violation> out;
  const SensorGeometry& g = stream.geometry();
  constexpr std::uint32_t kMaxSide = std::numeric_limits<std::uint16_t>::max() + 1u;
  if (g.width < 1 || g.height < 1 || g.width > kMaxSide || g.height > kMaxSide) {
    out.push_back({Violation::Kind::bad_geometry, 0,
                   "geometry " + std::to_string(g.width) + "x" + std::to_string(g.height) + " is not usable"});
  }
  const auto events = stream.events();
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (!g.contains(e.x, e.y)) {
      out.push_back({Violation::Kind::out_of_bounds, i,
                     "event " + std::to_string(i) + " at (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                         ") outside " + std::to_string(g.width) + "x" + std::to_string(g.height)});
    }
    if (e.p != 1 && e.p != -1) {
      out.push_back({Violation::Kind::illegal_polarity, i,
                     "event " + std::to_string(i) + " has polarity " + std::to_string(e.p)});
    }
    if (e.t < 0) {
      out.push_back({Violation::Kind::negative_timestamp, i,
                     "event " + std::to_string(i) + " has negative timestamp " + std::to_string(e.t)});
    }
    if (i > 0 && e.t < events[i - 1].t) {
      out.push_back({Violation::Kind::non_monotone_timestamp, i,
                     "event " + std::to_string(i) + " timestamp " + std::to_string(e.t) + " precedes " +
                         std::to_string(events[i - 1].t)});
    }
  }
  return out;
}

EventStream truncate_by_ratio(const EventStream& stream, double ratio) {
  if (stream.empty()) throw Error("cannot truncate empty stream");
  if (!(ratio > 0.0 && ratio <= 1.0)) throw Error("ratio must be in (0, 1], got " + std::to_string(ratio));

  const Timestamp first = stream.first_timestamp();
  const Timestamp span = stream.last_timestamp() - first;
  // Integer timestamps: t - first <= ratio*span  <=>  t - first <= floor(ratio*span).
  const Timestamp offset =
      ratio == 1.0 ? span
                   : static_cast<Timestamp>(std::floor(static_cast<long double>(ratio) * static_cast<long double>(span)));
  const Timestamp cutoff = first + offset;

  const auto events = stream.events();
  const auto end = std::upper_bound(events.begin(), events.end(), cutoff,
                                    [](Timestamp c, const Event& e) { return c < e.t; });
  return EventStream(stream.geometry(), std::vector<Event>(events.begin(), end));
}

}  // namespace evframe
