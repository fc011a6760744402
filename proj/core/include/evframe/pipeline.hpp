#pragma once

#include <cstddef>

#include "evframe/encoders.hpp"
#include "evframe/frame_file.hpp"
#include "evframe/windowing.hpp"

namespace evframe {

struct EncodeOptions {
  WindowConfig window;
  FrameKind kind = FrameKind::timestamp;
  PolarityMode polarity = PolarityMode::merged;
  unsigned threads = 1;
};

/// segment() followed by per-window encoding. Windows are encoded on up to
/// `threads` workers; the result does not depend on the thread count.
FrameTensor encode_stream(const EventStream& stream, const EncodeOptions& options);

}  // namespace evframe
