#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace evframe {

using Timestamp = std::int64_t;  // microseconds

/// One sensor spike. Polarity is +1 (brighter) or -1 (darker).
struct Event {
  Timestamp t = 0;
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  std::int8_t p = 1;

  friend bool operator==(const Event&, const Event&) = default;
};

struct SensorGeometry {
  std::uint32_t width = 128;
  std::uint32_t height = 128;

  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width) * height;
  }
  bool contains(std::uint32_t x, std::uint32_t y) const noexcept {
    return x < width && y < height;
  }

  friend bool operator==(const SensorGeometry&, const SensorGeometry&) = default;
};

inline constexpr SensorGeometry kDvs128Geometry{128, 128};
inline constexpr SensorGeometry kDavis240Geometry{240, 180};

/// A finite, time-ordered sequence of events from one sensor.
///
/// The stream is immutable once built. The constructor does not check the
/// ordering invariant; use validate_stream() on untrusted data. All parsers
/// and the simulator produce streams that satisfy it.
class EventStream {
 public:
  EventStream() = default;
  EventStream(SensorGeometry geometry, std::vector<Event> events);

  const SensorGeometry& geometry() const noexcept { return geometry_; }
  std::span<const Event> events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  Timestamp first_timestamp() const;
  Timestamp last_timestamp() const;

  friend bool operator==(const EventStream&, const EventStream&) = default;

 private:
  SensorGeometry geometry_;
  std::vector<Event> events_;
};

struct Violation {
  enum class Kind { out_of_bounds, non_monotone_timestamp, illegal_polarity, negative_timestamp, bad_geometry };

  Kind kind;
  std::size_t index;  // event index; 0 for bad_geometry
  std::string message;
};

/// Every invariant violation in the stream; empty iff the stream is valid.
std::vector<Violation> validate_stream(const EventStream& stream);

/// Keeps the events with t <= t_first + ratio * (t_last - t_first).
/// Throws Error on an empty stream or a ratio outside (0, 1].
EventStream truncate_by_ratio(const EventStream& stream, double ratio);

}  // namespace evframe
