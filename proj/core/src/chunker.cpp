#include "evframe/chunker.hpp"

#include <algorithm>

#include "evframe/error.hpp"

namespace evframe {

bool Chunk::all_empty() const noexcept {
  return std::all_of(frames.begin(), frames.end(), [](const EncodedFrame& f) { return f.empty; });
}

std::vector<Chunk> make_chunks(std::span<const EncodedFrame> frames, const ChunkConfig& config) {
  if (config.size == 0 || config.stride == 0) throw Error("chunk size and stride must be positive");
  for (std::size_t i = 1; i < frames.size(); ++i) {
    const EncodedFrame& a = frames.front();
    const EncodedFrame& b = frames[i];
    if (a.width != b.width || a.height != b.height || a.channels != b.channels)
      throw Error("frame " + std::to_string(i) + " has different geometry from frame 0");
    if (a.kind != b.kind || a.polarity_mode != b.polarity_mode)
      throw Error("frame " + std::to_string(i) + " has a different encoding from frame 0");
  }

  std::vector<Chunk> chunks;
  if (frames.size() < config.size) return chunks;
  chunks.reserve((frames.size() - config.size) / config.stride + 1);
  for (std::size_t first = 0; first + config.size <= frames.size(); first += config.stride)
    chunks.push_back(Chunk{frames.subspan(first, config.size), first, first + config.size - 1});
  return chunks;
}

std::vector<Chunk> apply_empty_policy(std::vector<Chunk> chunks, EmptyPolicy policy) {
  if (policy == EmptyPolicy::drop_all_empty_chunks)
    std::erase_if(chunks, [](const Chunk& c) { return c.all_empty(); });
  return chunks;
}

}  // namespace evframe
