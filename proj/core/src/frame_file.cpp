#include "evframe/frame_file.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <string_view>

#include "evframe/error.hpp"
#include "evframe/io.hpp"

namespace evframe {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'E', 'V', 'F', 'R'};
constexpr std::size_t kHeaderSize = 4 + 1 + 4 * 4;
constexpr std::size_t kFramePrefix = 8 + 8 + 1;

template <typename Int>
void put_le(std::vector<std::uint8_t>& out, Int v) {
  auto u = static_cast<std::make_unsigned_t<Int>>(v);
  for (std::size_t i = 0; i < sizeof(Int); ++i) out.push_back(static_cast<std::uint8_t>(u >> (8 * i)));
}

template <typename Int>
Int get_le(const std::uint8_t* p) {
  std::make_unsigned_t<Int> u = 0;
  for (std::size_t i = 0; i < sizeof(Int); ++i) u |= static_cast<std::make_unsigned_t<Int>>(p[i]) << (8 * i);
  return static_cast<Int>(u);
}

}  // namespace

std::vector<std::uint8_t> serialize_frames(const FrameTensor& tensor) {
  const std::size_t frame_bytes = static_cast<std::size_t>(tensor.width) * tensor.height * tensor.channels;
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kHeaderSize + tensor.frames.size() * (kFramePrefix + frame_bytes));
  out.push_back(kFrameFileVersion);
  put_le(out, tensor.width);
  put_le(out, tensor.height);
  put_le(out, tensor.channels);
  put_le(out, static_cast<std::uint32_t>(tensor.frames.size()));
  for (std::size_t i = 0; i < tensor.frames.size(); ++i) {
    const EncodedFrame& f = tensor.frames[i];
    if (f.width != tensor.width || f.height != tensor.height || f.channels != tensor.channels ||
        f.pixels.size() != frame_bytes)
      throw Error("frame " + std::to_string(i) + " does not match the tensor shape");
    put_le(out, static_cast<std::uint64_t>(f.window_start));
    put_le(out, static_cast<std::uint64_t>(f.window_end));
    out.push_back(f.empty ? 1 : 0);
    out.insert(out.end(), f.pixels.begin(), f.pixels.end());
  }
  return out;
}

FrameTensor deserialize_frames(std::span<const std::uint8_t> bytes) {
  using Where = ParseError::Where;
  if (bytes.size() < kHeaderSize) throw ParseError("frame file shorter than its header", Where::byte_offset, bytes.size());
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw ParseError("bad magic, expected EVFR", Where::byte_offset, 0);
  if (bytes[4] != kFrameFileVersion)
    throw ParseError("unsupported frame file version " + std::to_string(bytes[4]), Where::byte_offset, 4);

  FrameTensor tensor;
  tensor.width = get_le<std::uint32_t>(bytes.data() + 5);
  tensor.height = get_le<std::uint32_t>(bytes.data() + 9);
  tensor.channels = get_le<std::uint32_t>(bytes.data() + 13);
  const std::uint32_t count = get_le<std::uint32_t>(bytes.data() + 17);
  if (tensor.channels != 1 && tensor.channels != 3)
    throw ParseError("channel count must be 1 or 3", Where::byte_offset, 13);

  // width*height fits in 64 bits; beyond that, divide instead of multiplying.
  const std::uint64_t pixels = std::uint64_t{tensor.width} * tensor.height;
  const std::uint64_t body = bytes.size() - kHeaderSize;
  const bool fits = count == 0 || (pixels <= body && (kFramePrefix + pixels * tensor.channels) * count == body &&
                                   body / count == kFramePrefix + pixels * tensor.channels);
  if (!fits)
    throw ParseError("file size " + std::to_string(bytes.size()) + " does not match the declared " + std::to_string(count) +
                         " frames of " + std::to_string(tensor.width) + "x" + std::to_string(tensor.height) + "x" +
                         std::to_string(tensor.channels),
                     Where::byte_offset, bytes.size());
  if (count == 0 && body != 0) throw ParseError("trailing bytes after an empty frame list", Where::byte_offset, kHeaderSize);
  const auto frame_bytes = static_cast<std::size_t>(pixels * tensor.channels);

  tensor.frames.reserve(count);
  const std::uint8_t* p = bytes.data() + kHeaderSize;
  for (std::uint32_t i = 0; i < count; ++i) {
    EncodedFrame f;
    f.width = tensor.width;
    f.height = tensor.height;
    f.channels = tensor.channels;
    f.kind = FrameKind::unknown;
    f.polarity_mode = tensor.channels == 3 ? PolarityMode::merged : PolarityMode::ignore;
    f.window_start = get_le<std::int64_t>(p);
    f.window_end = get_le<std::int64_t>(p + 8);
    if (p[16] > 1)
      throw ParseError("empty flag must be 0 or 1", Where::byte_offset, static_cast<std::uint64_t>(p + 16 - bytes.data()));
    f.empty = p[16] == 1;
    p += kFramePrefix;
    f.pixels.assign(p, p + frame_bytes);
    p += frame_bytes;
    tensor.frames.push_back(std::move(f));
  }
  return tensor;
}

void write_frame_file(const std::filesystem::path& path, const FrameTensor& tensor) {
  const auto bytes = serialize_frames(tensor);
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

FrameTensor read_frame_file(const std::filesystem::path& path) { return deserialize_frames(read_binary_file(path)); }

}  // namespace evframe
