#include <doctest.h>

#include <random>
#include <string>

#include "evframe/error.hpp"
#include "evframe/ingest.hpp"
#include "test_support.hpp"

using namespace evframe;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view header, std::initializer_list<std::uint8_t> records) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), records);
  return out;
}

}  // namespace

TEST_CASE("aedat header-only file is an empty stream") {
  AedatParseStats stats;
  const auto s = parse_aedat2(bytes_of("#!AER-DAT2.0\n", {}), AedatLayout::dvs128(), kDvs128Geometry, &stats);
  CHECK(s.empty());
  CHECK(stats.header_lines == 1);
  CHECK(stats.records == 0);
}

TEST_CASE("aedat dvs128 record decodes per layout") {
  const auto s = parse_aedat2(bytes_of("#!AER-DAT2.0\r\n# comment\n", {0x00, 0x00, 0x12, 0x05, 0x00, 0x00, 0x00, 0x64}),
                              AedatLayout::dvs128(), kDvs128Geometry);
  REQUIRE(s.size() == 1);
  CHECK(s.events()[0] == Event{100, 2, 18, -1});
}

TEST_CASE("aedat timestamp wrap adds 2^32 ticks") {
  AedatParseStats stats;
  const auto s = parse_aedat2(bytes_of("", {0, 0, 0, 0, 0xFF, 0xFF, 0xFF, 0xFF, 0, 0, 0, 0, 0, 0, 0, 1}),
                              AedatLayout::dvs128(), kDvs128Geometry, &stats);
  REQUIRE(s.size() == 2);
  CHECK(s.events()[0].t == 4294967295LL);
  CHECK(s.events()[1].t == 4294967297LL);
  CHECK(stats.timestamp_wraps == 1);
  CHECK(validate_stream(s).empty());
}

TEST_CASE("aedat us_per_tick scales timestamps") {
  AedatLayout layout = AedatLayout::dvs128();
  layout.us_per_tick = 10;
  const auto s = parse_aedat2(bytes_of("", {0, 0, 0, 0, 0, 0, 0, 7}), layout, kDvs128Geometry);
  CHECK(s.events()[0].t == 70);
}

TEST_CASE("aedat errors carry positions") {
  SUBCASE("trailing partial record") {
    try {
      parse_aedat2(bytes_of("#h\n", {0, 0, 0, 0, 0, 0, 0, 1, 9, 9, 9}), AedatLayout::dvs128(), kDvs128Geometry);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.where() == ParseError::Where::byte_offset);
      CHECK(e.position() == 11);
    }
  }
  SUBCASE("coordinate outside geometry") {
    try {
      // y = 100 on a 128x64 sensor, second record
      parse_aedat2(bytes_of("", {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 100, 0, 0, 0, 0, 2}), AedatLayout::dvs128(),
                   SensorGeometry{128, 64});
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.where() == ParseError::Where::record);
      CHECK(e.position() == 1);
    }
  }
  SUBCASE("binary garbage in header") {
    CHECK_THROWS_AS(parse_aedat2(bytes_of("#bad\x01\n", {}), AedatLayout::dvs128(), kDvs128Geometry), ParseError);
  }
  SUBCASE("unterminated header") {
    CHECK_THROWS_AS(parse_aedat2(bytes_of("#no newline", {}), AedatLayout::dvs128(), kDvs128Geometry), ParseError);
  }
  SUBCASE("small backwards jump is not a wrap") {
    CHECK_THROWS_AS(parse_aedat2(bytes_of("", {0, 0, 0, 0, 0, 0, 0, 9, 0, 0, 0, 0, 0, 0, 0, 3}),
                                 AedatLayout::dvs128(), kDvs128Geometry),
                    ParseError);
  }
}

TEST_CASE("davis240 layout skips non-DVS records and counts them") {
  const AedatLayout layout = AedatLayout::davis240();
  // x=239 y=179 polarity on; then an IMU-like record with bit 31 set.
  const std::uint32_t addr = (239u << 12) | (179u << 22) | (1u << 11);
  const std::uint32_t imu = 0x80000000u | 0x123u;
  std::vector<std::uint8_t> b;
  for (std::uint32_t w : {addr, 50u, imu, 60u, addr & ~(1u << 11), 70u})
    for (int s = 24; s >= 0; s -= 8) b.push_back(static_cast<std::uint8_t>(w >> s));
  AedatParseStats stats;
  const auto s = parse_aedat2(b, layout, kDavis240Geometry, &stats);
  REQUIRE(s.size() == 2);
  CHECK(s.events()[0] == Event{50, 239, 179, 1});
  CHECK(s.events()[1] == Event{70, 239, 179, -1});
  CHECK(stats.skipped_non_dvs == 1);
  CHECK(stats.records == 3);
}

TEST_CASE("aedat layout validation rejects overlapping fields") {
  AedatLayout layout = AedatLayout::dvs128();
  layout.polarity_shift = 3;
  CHECK_THROWS_AS(layout.validate(), Error);
  CHECK_NOTHROW(AedatLayout::dvs128().validate());
  CHECK_NOTHROW(AedatLayout::davis240().validate());
}

TEST_CASE("aedat writer and parser agree on random streams") {
  std::mt19937_64 rng(3);
  for (const auto& [layout, geometry] : {std::pair{AedatLayout::dvs128(), kDvs128Geometry},
                                         std::pair{AedatLayout::davis240(), kDavis240Geometry}}) {
    // Start near the top of the 32-bit counter so the stream wraps.
    const EventStream s(geometry, testing::random_events(rng, geometry, 2000, 4294960000LL, 50));
    AedatParseStats stats;
    CHECK(parse_aedat2(write_aedat2(s, layout), layout, geometry, &stats) == s);
    CHECK(stats.timestamp_wraps == 1);
  }
}

TEST_CASE("text parsing") {
  SUBCASE("fields map directly") {
    const auto s = parse_text("100 2 18 1\n", kDvs128Geometry);
    REQUIRE(s.size() == 1);
    CHECK(s.events()[0] == Event{100, 2, 18, 1});
  }
  SUBCASE("zero polarity reads as negative") {
    CHECK(parse_text("100 2 18 0", kDvs128Geometry).events()[0].p == -1);
  }
  SUBCASE("commas, comments and CRLF") {
    const auto s = parse_text("# t,x,y,p\r\n5,1,2,-1\r\n\n7\t3 4 1\r\n", kDvs128Geometry);
    REQUIRE(s.size() == 2);
    CHECK(s.events()[0] == Event{5, 1, 2, -1});
    CHECK(s.events()[1] == Event{7, 3, 4, 1});
  }
  SUBCASE("empty input") { CHECK(parse_text("", kDvs128Geometry).empty()); }
  SUBCASE("malformed lines report their line number") {
    for (const char* bad : {"1 2 3\n", "1 2 3 2\n", "1 2 3 1 9\n", "a 2 3 1\n", "1 -2 3 1\n", "1 200 3 1\n", "-5 1 1 1\n"}) {
      try {
        parse_text(std::string("# header\n0 0 0 1\n") + bad, kDvs128Geometry);
        FAIL("expected ParseError for " << bad);
      } catch (const ParseError& e) {
        CHECK(e.where() == ParseError::Where::line);
        CHECK(e.position() == 3);
      }
    }
  }
  SUBCASE("backwards timestamp") { CHECK_THROWS_AS(parse_text("5 0 0 1\n4 0 0 1\n", kDvs128Geometry), ParseError); }
}

TEST_CASE("text writer") {
  CHECK(write_text(EventStream(kDvs128Geometry, {})).empty());
  CHECK(write_text(EventStream(kDvs128Geometry, {Event{100, 2, 18, -1}})) == "100 2 18 -1\n");
}

TEST_CASE("text round trip on random streams") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const EventStream s(kDavis240Geometry,
                        testing::random_events(rng, kDavis240Geometry, trial * 37, trial * 1'000'000'007LL, 1000));
    CHECK(parse_text(write_text(s), kDavis240Geometry) == s);
  }
}
