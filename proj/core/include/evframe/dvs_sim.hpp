#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evframe/events.hpp"

namespace evframe {

/// Linear intensity samples, row-major. All values must be > 0.
struct IntensityFrame {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<double> values;
  Timestamp timestamp = 0;
};

struct SimConfig {
  double contrast_threshold = 0.2;  // log-intensity step per event
  Timestamp refractory_period_us = 0;
};

/// Idealized DVS pixel model. Log intensity is interpolated linearly between
/// frames; each crossing of the reference level +-C emits one event and moves
/// the reference by exactly C. Crossings inside the refractory period move
/// the reference but emit nothing. Output is sorted by time, ties in
/// row-major pixel order.
EventStream simulate(std::span<const IntensityFrame> frames, const SimConfig& config);

}  // namespace evframe
