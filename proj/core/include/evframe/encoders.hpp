#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evframe/windowing.hpp"

namespace evframe {

enum class PolarityFilter { positive, negative, both };
enum class FrameKind { timestamp, event_count, unknown };
enum class PolarityMode { ignore, merged };

/// Per-pixel real values, row-major.
struct ScalarField {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<double> values;

  double at(std::uint32_t x, std::uint32_t y) const { return values[static_cast<std::size_t>(y) * width + x]; }
  friend bool operator==(const ScalarField&, const ScalarField&) = default;
};

/// 8-bit raster, row-major, channel-interleaved.
struct EncodedFrame {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t channels = 1;
  std::vector<std::uint8_t> pixels;
  FrameKind kind = FrameKind::unknown;
  PolarityMode polarity_mode = PolarityMode::ignore;
  Timestamp window_start = 0;
  Timestamp window_end = 0;
  bool empty = true;

  std::uint8_t at(std::uint32_t x, std::uint32_t y, std::uint32_t c = 0) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  friend bool operator==(const EncodedFrame&, const EncodedFrame&) = default;
};

/// Normalized latest-event time per pixel: (t_n - t_begin) / (t_end - t_begin).
/// t_begin/t_end come from the whole window, not just the filtered events.
/// If t_end == t_begin every active pixel is 1.
ScalarField timestamp_field(const EventWindow& window, PolarityFilter filter);

/// Number of filtered events per pixel.
ScalarField event_count_field(const EventWindow& window, PolarityFilter filter);

/// Three channels: positive events, negative events, zeros. Both channels are
/// scaled to 0..255 by a shared maximum (1.0 for timestamps).
EncodedFrame encode_merged(const EventWindow& window, FrameKind kind);

/// One channel, polarity ignored.
EncodedFrame encode_single(const EventWindow& window, FrameKind kind);

EncodedFrame encode(const EventWindow& window, FrameKind kind, PolarityMode mode);

/// round(255 * value / max_value), for 0 <= value <= max_value.
std::uint8_t quantize(double value, double max_value);

}  // namespace evframe
