#include "evframe/ingest.hpp"

#include <array>
#include <charconv>
#include <cstring>

#include "evframe/error.hpp"

namespace evframe {
namespace {

constexpr std::size_t kRecordSize = 8;
constexpr std::uint64_t kHalfRange = std::uint64_t{1} << 31;
constexpr std::uint64_t kFullRange = std::uint64_t{1} << 32;

std::uint32_t load_be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) | (std::uint32_t{p[2]} << 8) | std::uint32_t{p[3]};
}

void store_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t field_mask(unsigned bits) {
  return bits >= 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << bits) - 1u);
}

std::uint64_t field_bits(unsigned shift, unsigned bits) {
  return static_cast<std::uint64_t>(field_mask(bits)) << shift;
}

bool header_byte_ok(std::uint8_t c) {
  return (c >= 0x20 && c < 0x7F) || c == '\t' || c == '\r';
}

std::string coord_text(std::uint32_t x, std::uint32_t y, SensorGeometry g) {
  return "coordinate (" + std::to_string(x) + "," + std::to_string(y) + ") outside " + std::to_string(g.width) +
         "x" + std::to_string(g.height);
}

}  // namespace

AedatLayout AedatLayout::dvs128() { return AedatLayout{}; }

AedatLayout AedatLayout::davis240() {
  AedatLayout layout;
  layout.x_shift = 12;
  layout.x_bits = 10;
  layout.y_shift = 22;
  layout.y_bits = 9;
  layout.polarity_shift = 11;
  layout.polarity_on_value = 1;
  layout.non_dvs_type_bit = 31;
  return layout;
}

void AedatLayout::validate() const {
  if (x_bits == 0 || y_bits == 0) throw Error("aedat layout: x and y need at least one bit");
  if (x_bits > 16 || y_bits > 16) throw Error("aedat layout: coordinate fields wider than 16 bits");
  if (x_shift + x_bits > 32 || y_shift + y_bits > 32 || polarity_shift >= 32)
    throw Error("aedat layout: field exceeds the 32-bit address word");
  if (non_dvs_type_bit && *non_dvs_type_bit >= 32) throw Error("aedat layout: type bit exceeds the address word");
  if (polarity_on_value > 1) throw Error("aedat layout: polarity_on_value must be 0 or 1");
  if (us_per_tick == 0) throw Error("aedat layout: us_per_tick must be positive");

  const std::array<std::uint64_t, 4> fields{
      field_bits(x_shift, x_bits), field_bits(y_shift, y_bits), field_bits(polarity_shift, 1),
      non_dvs_type_bit ? field_bits(*non_dvs_type_bit, 1) : 0};
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j)
      if (fields[i] & fields[j]) throw Error("aedat layout: bit fields overlap");
}

EventStream parse_aedat2(std::span<const std::uint8_t> bytes, const AedatLayout& layout, SensorGeometry geometry,
                         AedatParseStats* stats) {
  layout.validate();
  AedatParseStats local;
  AedatParseStats& st = stats ? *stats : local;
  st = {};

  std::size_t pos = 0;
  while (pos < bytes.size() && bytes[pos] == '#') {
    std::size_t eol = pos;
    while (eol < bytes.size() && bytes[eol] != '\n') {
      if (!header_byte_ok(bytes[eol])) throw ParseError("header is not valid text", ParseError::Where::byte_offset, eol);
      ++eol;
    }
    if (eol == bytes.size()) throw ParseError("unterminated header line", ParseError::Where::byte_offset, pos);
    ++st.header_lines;
    pos = eol + 1;
  }

  const std::size_t payload = bytes.size() - pos;
  if (payload % kRecordSize != 0) {
    throw ParseError("trailing partial record of " + std::to_string(payload % kRecordSize) + " bytes",
                     ParseError::Where::byte_offset, pos + payload - payload % kRecordSize);
  }
  const std::size_t records = payload / kRecordSize;
  st.records = records;

  const std::uint32_t x_mask = field_mask(layout.x_bits);
  const std::uint32_t y_mask = field_mask(layout.y_bits);

  std::vector<Event> events;
  events.reserve(records);
  std::uint64_t wrap_offset = 0;
  std::uint32_t prev_raw = 0;
  std::uint64_t last_ticks = 0;
  const std::uint8_t* rec = bytes.data() + pos;
  for (std::size_t i = 0; i < records; ++i, rec += kRecordSize) {
    const std::uint32_t addr = load_be32(rec);
    const std::uint32_t raw = load_be32(rec + 4);
    if (i > 0 && raw < prev_raw && prev_raw - raw > kHalfRange) {
      wrap_offset += kFullRange;
      ++st.timestamp_wraps;
    }
    prev_raw = raw;

    if (layout.non_dvs_type_bit && ((addr >> *layout.non_dvs_type_bit) & 1u)) {
      ++st.skipped_non_dvs;
      continue;
    }

    const std::uint64_t ticks = wrap_offset + raw;
    if (!events.empty() && ticks < last_ticks)
      throw ParseError("timestamp goes backwards", ParseError::Where::record, i);
    last_ticks = ticks;

    const std::uint32_t x = (addr >> layout.x_shift) & x_mask;
    const std::uint32_t y = (addr >> layout.y_shift) & y_mask;
    if (!geometry.contains(x, y)) throw ParseError(coord_text(x, y, geometry), ParseError::Where::record, i);
    const std::uint32_t pol = (addr >> layout.polarity_shift) & 1u;

    events.push_back(Event{static_cast<Timestamp>(ticks * layout.us_per_tick), static_cast<std::uint16_t>(x),
                           static_cast<std::uint16_t>(y),
                           static_cast<std::int8_t>(pol == layout.polarity_on_value ? 1 : -1)});
  }
  st.events = events.size();
  return EventStream(geometry, std::move(events));
}

std::vector<std::uint8_t> write_aedat2(const EventStream& stream, const AedatLayout& layout,
                                       std::string_view header) {
  layout.validate();
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + stream.size() * kRecordSize);
  std::uint64_t prev_ticks = 0;
  bool first = true;
  for (const Event& e : stream.events()) {
    if (e.t < 0 || e.t % layout.us_per_tick != 0) throw Error("timestamp not representable in aedat ticks");
    const auto ticks = static_cast<std::uint64_t>(e.t) / layout.us_per_tick;
    if (!first && ticks - prev_ticks >= kHalfRange) throw Error("timestamp gap too large for wraparound decoding");
    if (first && ticks >= kFullRange) throw Error("first timestamp exceeds 32-bit tick range");
    if (e.x > field_mask(layout.x_bits) || e.y > field_mask(layout.y_bits))
      throw Error("coordinate does not fit the aedat layout");
    first = false;
    prev_ticks = ticks;

    const std::uint32_t pol = e.p > 0 ? layout.polarity_on_value : 1u - layout.polarity_on_value;
    const std::uint32_t addr = (std::uint32_t{e.x} << layout.x_shift) | (std::uint32_t{e.y} << layout.y_shift) |
                               (pol << layout.polarity_shift);
    store_be32(out, addr);
    store_be32(out, static_cast<std::uint32_t>(ticks & 0xFFFFFFFFu));
  }
  return out;
}

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

template <typename Int>
bool next_int(const char*& cur, const char* end, Int& value) {
  while (cur < end && is_separator(*cur)) ++cur;
  if (cur == end) return false;
  auto [ptr, ec] = std::from_chars(cur, end, value);
  if (ec != std::errc{} || (ptr < end && !is_separator(*ptr))) return false;
  cur = ptr;
  return true;
}

}  // namespace

EventStream parse_text(std::string_view text, SensorGeometry geometry) {
  std::vector<Event> events;
  events.reserve(text.size() / 16);
  const char* cur = text.data();
  const char* const end = cur + text.size();
  std::uint64_t line_no = 0;
  while (cur < end) {
    ++line_no;
    const char* eol = static_cast<const char*>(std::memchr(cur, '\n', static_cast<std::size_t>(end - cur)));
    if (!eol) eol = end;
    const char* p = cur;
    while (p < eol && is_separator(*p)) ++p;
    if (p < eol && *p != '#') {
      std::int64_t t = 0;
      std::uint32_t x = 0;
      std::uint32_t y = 0;
      int pol = 0;
      if (!next_int(p, eol, t) || !next_int(p, eol, x) || !next_int(p, eol, y) || !next_int(p, eol, pol))
        throw ParseError("expected four integer fields \"t x y p\"", ParseError::Where::line, line_no);
      while (p < eol && is_separator(*p)) ++p;
      if (p != eol) throw ParseError("unexpected trailing field", ParseError::Where::line, line_no);
      if (t < 0) throw ParseError("negative timestamp", ParseError::Where::line, line_no);
      if (pol != 1 && pol != -1 && pol != 0)
        throw ParseError("polarity must be 1, -1 or 0", ParseError::Where::line, line_no);
      if (!geometry.contains(x, y)) throw ParseError(coord_text(x, y, geometry), ParseError::Where::line, line_no);
      if (!events.empty() && t < events.back().t)
        throw ParseError("timestamp goes backwards", ParseError::Where::line, line_no);
      events.push_back(Event{t, static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y),
                             static_cast<std::int8_t>(pol == 1 ? 1 : -1)});
    }
    cur = eol == end ? end : eol + 1;
  }
  return EventStream(geometry, std::move(events));
}

std::string write_text(const EventStream& stream) {
  std::string out;
  out.reserve(stream.size() * 20);
  std::array<char, 24> buf;
  auto put = [&](auto value, char sep) {
    out.append(buf.data(), std::to_chars(buf.data(), buf.data() + buf.size(), value).ptr);
    out.push_back(sep);
  };
  for (const Event& e : stream.events()) {
    put(e.t, ' ');
    put(e.x, ' ');
    put(e.y, ' ');
    put(static_cast<int>(e.p), '\n');
  }
  return out;
}

}  // namespace evframe
