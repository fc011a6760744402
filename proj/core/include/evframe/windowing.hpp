#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evframe/events.hpp"

namespace evframe {

struct WindowConfig {
  Timestamp window_length_us = 80'000;
};

/// Events falling in [window_start, window_end). The event span points into
/// the source EventStream, which must outlive the window.
struct EventWindow {
  std::span<const Event> events;
  Timestamp window_start = 0;
  Timestamp window_end = 0;
  // Earliest and latest event time over all pixels; meaningless when empty().
  Timestamp t_begin = 0;
  Timestamp t_end = 0;
  SensorGeometry geometry;

  bool empty() const noexcept { return events.empty(); }
};

/// Builds a window over an arbitrary event span (no tiling). t_begin/t_end
/// are taken from the events. Used by tests and by segment().
EventWindow make_window(std::span<const Event> events, Timestamp window_start, Timestamp window_end,
                        SensorGeometry geometry);

/// Tiles the stream into consecutive windows of length T anchored at the
/// first event. Interior windows without events are kept.
std::vector<EventWindow> segment(const EventStream& stream, const WindowConfig& config);

}  // namespace evframe
