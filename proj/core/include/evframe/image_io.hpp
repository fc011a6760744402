#pragma once

#include <filesystem>
#include <string>

#include "evframe/encoders.hpp"

namespace evframe {

/// Binary netpbm: P5 for one channel, P6 for three.
std::string encode_netpbm(const EncodedFrame& frame);

/// Writes <dir>/<stem>.pgm or .ppm and returns the path.
std::filesystem::path write_netpbm(const std::filesystem::path& dir, const std::string& stem,
                                   const EncodedFrame& frame);

}  // namespace evframe
