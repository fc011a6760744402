#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evframe/encoders.hpp"

namespace evframe {

struct ChunkConfig {
  std::size_t size = 3;
  std::size_t stride = 1;
};

/// A run of consecutive frames, oldest first. `frames` views the source
/// frame sequence.
struct Chunk {
  std::span<const EncodedFrame> frames;
  std::size_t first = 0;  // index of the oldest frame
  std::size_t index = 0;  // index of the newest frame

  bool all_empty() const noexcept;
};

enum class EmptyPolicy { keep, drop_all_empty_chunks };

/// Sliding buffer over the frame sequence: chunk j holds frames
/// [j*stride, j*stride + size). Throws Error when frames disagree on
/// geometry, channel count, kind or polarity mode.
std::vector<Chunk> make_chunks(std::span<const EncodedFrame> frames, const ChunkConfig& config = {});

std::vector<Chunk> apply_empty_policy(std::vector<Chunk> chunks, EmptyPolicy policy);

}  // namespace evframe
