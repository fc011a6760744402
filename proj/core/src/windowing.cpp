#include "evframe/windowing.hpp"

#include "evframe/error.hpp"

namespace evframe {

EventWindow make_window(std::span<const Event> events, Timestamp window_start, Timestamp window_end,
                        SensorGeometry geometry) {
  EventWindow w;
  w.events = events;
  w.window_start = window_start;
  w.window_end = window_end;
  w.geometry = geometry;
  if (!events.empty()) {
    w.t_begin = events.front().t;
    w.t_end = events.front().t;
    for (const Event& e : events) {
      if (e.t < w.t_begin) w.t_begin = e.t;
      if (e.t > w.t_end) w.t_end = e.t;
    }
  }
  return w;
}

std::vector<EventWindow> segment(const EventStream& stream, const WindowConfig& config) {
  const Timestamp length = config.window_length_us;
  if (length <= 0) throw Error("window length must be positive, got " + std::to_string(length));
  std::vector<EventWindow> windows;
  if (stream.empty()) return windows;

  const auto events = stream.events();
  const Timestamp origin = events.front().t;
  const auto count = static_cast<std::size_t>((events.back().t - origin) / length + 1);
  windows.reserve(count);

  std::size_t begin = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Timestamp start = origin + static_cast<Timestamp>(k) * length;
    const Timestamp end = start + length;
    std::size_t stop = begin;
    while (stop < events.size() && events[stop].t < end) ++stop;
    EventWindow w;
    w.events = events.subspan(begin, stop - begin);
    w.window_start = start;
    w.window_end = end;
    w.geometry = stream.geometry();
    if (stop > begin) {
      // Sorted input: first and last event bound the window.
      w.t_begin = events[begin].t;
      w.t_end = events[stop - 1].t;
    }
    windows.push_back(w);
    begin = stop;
  }
  return windows;
}

}  // namespace evframe
