#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "evframe/encoders.hpp"

namespace evframe {

/// "EVFR" tensor file: magic, version byte, then little-endian u32 width,
/// height, channels, frame_count. Each frame is u64 window_start, u64
/// window_end, u8 empty flag, then width*height*channels pixels.
inline constexpr std::uint8_t kFrameFileVersion = 1;

struct FrameTensor {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t channels = 1;
  std::vector<EncodedFrame> frames;
};

std::vector<std::uint8_t> serialize_frames(const FrameTensor& tensor);

/// Throws ParseError when the byte count disagrees with the header.
/// Loaded frames carry FrameKind::unknown; polarity mode follows the channel count.
FrameTensor deserialize_frames(std::span<const std::uint8_t> bytes);

void write_frame_file(const std::filesystem::path& path, const FrameTensor& tensor);
FrameTensor read_frame_file(const std::filesystem::path& path);

}  // namespace evframe
