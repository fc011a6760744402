#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evframe/events.hpp"

namespace evframe {

/// Bit layout of the 32-bit AEDAT 2.0 address word.
struct AedatLayout {
  unsigned x_shift = 1;
  unsigned x_bits = 7;
  unsigned y_shift = 8;
  unsigned y_bits = 7;
  unsigned polarity_shift = 0;
  unsigned polarity_on_value = 0;  // raw bit value that maps to p = +1
  std::uint32_t us_per_tick = 1;
  // When set, records with this bit = 1 are not polarity events and are skipped.
  std::optional<unsigned> non_dvs_type_bit;

  static AedatLayout dvs128();
  static AedatLayout davis240();

  /// Throws Error when fields overlap or exceed 32 bits.
  void validate() const;
};

struct AedatParseStats {
  std::size_t header_lines = 0;
  std::size_t records = 0;
  std::size_t events = 0;
  std::size_t skipped_non_dvs = 0;
  std::size_t timestamp_wraps = 0;
};

EventStream parse_aedat2(std::span<const std::uint8_t> bytes, const AedatLayout& layout,
                         SensorGeometry geometry, AedatParseStats* stats = nullptr);

/// Inverse of parse_aedat2 for polarity events; timestamps must fit the
/// 32-bit tick counter modulo wraparound. Used to build fixtures.
std::vector<std::uint8_t> write_aedat2(const EventStream& stream, const AedatLayout& layout,
                                       std::string_view header = "#!AER-DAT2.0\r\n");

/// "t x y p" per line, whitespace or comma separated. p = 0 reads as -1.
EventStream parse_text(std::string_view text, SensorGeometry geometry);

std::string write_text(const EventStream& stream);

}  // namespace evframe
