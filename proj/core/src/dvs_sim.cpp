#include "evframe/dvs_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "evframe/error.hpp"

namespace evframe {
namespace {

void check_inputs(std::span<const IntensityFrame> frames, const SimConfig& config) {
  if (frames.size() < 2) throw Error("simulation needs at least 2 frames, got " + std::to_string(frames.size()));
  if (!(config.contrast_threshold > 0.0) || !std::isfinite(config.contrast_threshold))
    throw Error("contrast threshold must be positive");
  if (config.refractory_period_us < 0) throw Error("refractory period must be non-negative");

  const std::uint32_t w = frames.front().width;
  const std::uint32_t h = frames.front().height;
  constexpr std::uint32_t kMaxSide = std::numeric_limits<std::uint16_t>::max() + 1u;
  if (w == 0 || h == 0 || w > kMaxSide || h > kMaxSide) throw Error("intensity frames have unusable dimensions");
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const IntensityFrame& f = frames[k];
    if (f.width != w || f.height != h || f.values.size() != static_cast<std::size_t>(w) * h)
      throw Error("frame " + std::to_string(k) + " dimensions differ from frame 0");
    if (f.timestamp < 0) throw Error("frame " + std::to_string(k) + " has a negative timestamp");
    if (k > 0 && f.timestamp <= frames[k - 1].timestamp)
      throw Error("frame " + std::to_string(k) + " timestamp is not after the previous frame");
    for (double v : f.values)
      if (!(v > 0.0) || !std::isfinite(v)) throw Error("frame " + std::to_string(k) + " has a non-positive intensity");
  }
}

}  // namespace

EventStream simulate(std::span<const IntensityFrame> frames, const SimConfig& config) {
  check_inputs(frames, config);
  const std::uint32_t width = frames.front().width;
  const std::uint32_t height = frames.front().height;
  const double c = config.contrast_threshold;
  const double tolerance = 1e-9 * c;

  std::vector<Event> events;
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * width + x;
      // Log intensity relative to the first frame, so a global gain cancels exactly.
      const double base = frames.front().values[idx];
      std::int64_t level = 0;  // reference is level * C
      double l_prev = 0.0;
      std::optional<Timestamp> last_emitted;

      auto emit = [&](Timestamp t, std::int8_t p) {
        if (last_emitted && t - *last_emitted < config.refractory_period_us) return;
        events.push_back(Event{t, static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y), p});
        last_emitted = t;
      };
      auto crossing_time = [&](double target, double l_next, Timestamp t0, Timestamp t1) {
        const double frac = std::clamp((target - l_prev) / (l_next - l_prev), 0.0, 1.0);
        return t0 + static_cast<Timestamp>(std::llround(frac * static_cast<double>(t1 - t0)));
      };

      for (std::size_t k = 1; k < frames.size(); ++k) {
        const double l_next = std::log(frames[k].values[idx] / base);
        const Timestamp t0 = frames[k - 1].timestamp;
        const Timestamp t1 = frames[k].timestamp;
        if (l_next > l_prev) {
          while (static_cast<double>(level + 1) * c <= l_next + tolerance) {
            ++level;
            emit(crossing_time(static_cast<double>(level) * c, l_next, t0, t1), 1);
          }
        } else if (l_next < l_prev) {
          while (static_cast<double>(level - 1) * c >= l_next - tolerance) {
            --level;
            emit(crossing_time(static_cast<double>(level) * c, l_next, t0, t1), -1);
          }
        }
        l_prev = l_next;
      }
    }
  }

  // Pixels were visited row-major and each pixel's events are chronological,
  // so a stable sort leaves simultaneous events in row-major order.
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
  return EventStream(SensorGeometry{width, height}, std::move(events));
}

}  // namespace evframe
