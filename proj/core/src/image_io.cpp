#include "evframe/image_io.hpp"

#include "evframe/error.hpp"
#include "evframe/io.hpp"

namespace evframe {

std::string encode_netpbm(const EncodedFrame& frame) {
  if (frame.channels != 1 && frame.channels != 3) throw Error("netpbm output needs 1 or 3 channels");
  std::string out = (frame.channels == 1 ? "P5\n" : "P6\n") + std::to_string(frame.width) + " " +
                    std::to_string(frame.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(frame.pixels.data()), frame.pixels.size());
  return out;
}

std::filesystem::path write_netpbm(const std::filesystem::path& dir, const std::string& stem,
                                   const EncodedFrame& frame) {
  const auto path = dir / (stem + (frame.channels == 1 ? ".pgm" : ".ppm"));
  write_file(path, encode_netpbm(frame));
  return path;
}

}  // namespace evframe
