#include "evframe/encoders.hpp"

#include <algorithm>
#include <cmath>

#include "evframe/error.hpp"

namespace evframe {
namespace {

bool passes(const Event& e, PolarityFilter filter) {
  switch (filter) {
    case PolarityFilter::positive:
      return e.p > 0;
    case PolarityFilter::negative:
      return e.p < 0;
    case PolarityFilter::both:
      return true;
  }
  return false;
}

ScalarField blank_field(const EventWindow& window) {
  ScalarField f;
  f.width = window.geometry.width;
  f.height = window.geometry.height;
  f.values.assign(window.geometry.pixel_count(), 0.0);
  return f;
}

EncodedFrame blank_frame(const EventWindow& window, FrameKind kind, PolarityMode mode) {
  EncodedFrame frame;
  frame.width = window.geometry.width;
  frame.height = window.geometry.height;
  frame.channels = mode == PolarityMode::merged ? 3 : 1;
  frame.pixels.assign(window.geometry.pixel_count() * frame.channels, 0);
  frame.kind = kind;
  frame.polarity_mode = mode;
  frame.window_start = window.window_start;
  frame.window_end = window.window_end;
  frame.empty = true;
  return frame;
}

ScalarField field_for(const EventWindow& window, FrameKind kind, PolarityFilter filter) {
  if (kind == FrameKind::unknown) throw Error("cannot encode a frame of unknown kind");
  return kind == FrameKind::timestamp ? timestamp_field(window, filter) : event_count_field(window, filter);
}

double max_value(const ScalarField& f) {
  return f.values.empty() ? 0.0 : *std::max_element(f.values.begin(), f.values.end());
}

}  // namespace

std::uint8_t quantize(double value, double max_value) {
  if (max_value <= 0.0) return 0;
  return static_cast<std::uint8_t>(std::lround(255.0 * value / max_value));
}

ScalarField timestamp_field(const EventWindow& window, PolarityFilter filter) {
  ScalarField f = blank_field(window);
  if (window.empty()) return f;

  const std::uint32_t width = window.geometry.width;
  const double span = static_cast<double>(window.t_end - window.t_begin);
  for (const Event& e : window.events) {
    if (!passes(e, filter)) continue;
    // Events are time-ordered, so the last write per pixel is its latest event.
    const double v = span > 0.0 ? static_cast<double>(e.t - window.t_begin) / span : 1.0;
    f.values[static_cast<std::size_t>(e.y) * width + e.x] = v;
  }
  return f;
}

ScalarField event_count_field(const EventWindow& window, PolarityFilter filter) {
  ScalarField f = blank_field(window);
  const std::uint32_t width = window.geometry.width;
  for (const Event& e : window.events)
    if (passes(e, filter)) f.values[static_cast<std::size_t>(e.y) * width + e.x] += 1.0;
  return f;
}

EncodedFrame encode_merged(const EventWindow& window, FrameKind kind) {
  if (kind == FrameKind::unknown) throw Error("cannot encode a frame of unknown kind");
  EncodedFrame frame = blank_frame(window, kind, PolarityMode::merged);
  if (window.empty()) return frame;

  const ScalarField pos = field_for(window, kind, PolarityFilter::positive);
  const ScalarField neg = field_for(window, kind, PolarityFilter::negative);
  const double vmax = kind == FrameKind::timestamp ? 1.0 : std::max(max_value(pos), max_value(neg));
  for (std::size_t i = 0; i < pos.values.size(); ++i) {
    frame.pixels[3 * i] = quantize(pos.values[i], vmax);
    frame.pixels[3 * i + 1] = quantize(neg.values[i], vmax);
  }
  frame.empty = false;
  return frame;
}

EncodedFrame encode_single(const EventWindow& window, FrameKind kind) {
  if (kind == FrameKind::unknown) throw Error("cannot encode a frame of unknown kind");
  EncodedFrame frame = blank_frame(window, kind, PolarityMode::ignore);
  if (window.empty()) return frame;

  const ScalarField field = field_for(window, kind, PolarityFilter::both);
  const double vmax = kind == FrameKind::timestamp ? 1.0 : max_value(field);
  for (std::size_t i = 0; i < field.values.size(); ++i) frame.pixels[i] = quantize(field.values[i], vmax);
  frame.empty = false;
  return frame;
}

EncodedFrame encode(const EventWindow& window, FrameKind kind, PolarityMode mode) {
  return mode == PolarityMode::merged ? encode_merged(window, kind) : encode_single(window, kind);
}

}  // namespace evframe
