#include <doctest.h>

#include <random>

#include "evframe/error.hpp"
#include "evframe/windowing.hpp"
#include "test_support.hpp"

using namespace evframe;

namespace {

EventStream stream_at(std::vector<Timestamp> ts) {
  std::vector<Event> events;
  for (Timestamp t : ts) events.push_back(Event{t, 0, 0, 1});
  return EventStream(kDvs128Geometry, std::move(events));
}

}  // namespace

TEST_CASE("default window length is 80 ms") { CHECK(WindowConfig{}.window_length_us == 80'000); }

TEST_CASE("segment boundary cases") {
  SUBCASE("both events inside one window") {
    const auto s = stream_at({0, 79'999});
    const auto w = segment(s, {});
    REQUIRE(w.size() == 1);
    CHECK(w[0].events.size() == 2);
    CHECK(w[0].t_begin == 0);
    CHECK(w[0].t_end == 79'999);
  }
  SUBCASE("window end is exclusive") {
    const auto s = stream_at({0, 80'000});
    const auto w = segment(s, {});
    REQUIRE(w.size() == 2);
    CHECK(w[0].events.size() == 1);
    CHECK(w[1].events.size() == 1);
    CHECK(w[1].window_start == 80'000);
  }
  SUBCASE("interior empty window is kept") {
    const auto s = stream_at({0, 100, 200'000});
    const auto w = segment(s, {});
    REQUIRE(w.size() == 3);
    CHECK(w[0].events.size() == 2);
    CHECK(w[1].empty());
    CHECK(w[1].window_start == 80'000);
    CHECK(w[1].window_end == 160'000);
    CHECK(w[2].events.size() == 1);
    CHECK(w[2].t_begin == 200'000);
  }
  SUBCASE("anchored at the first event") {
    const auto s = stream_at({1'000'003, 1'000'004});
    const auto w = segment(s, WindowConfig{10});
    REQUIRE(w.size() == 1);
    CHECK(w[0].window_start == 1'000'003);
    CHECK(w[0].window_end == 1'000'013);
  }
  SUBCASE("empty stream") { CHECK(segment(EventStream(kDvs128Geometry, {}), {}).empty()); }
  SUBCASE("non-positive length") { CHECK_THROWS_AS(segment(stream_at({0}), WindowConfig{0}), Error); }
}

TEST_CASE("segment partitions random streams like the brute-force assignment") {
  std::mt19937_64 rng(17);
  for (Timestamp length : {20'000, 50'000, 80'000, 1, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      const EventStream s(kDvs128Geometry,
                          testing::random_events(rng, kDvs128Geometry, 1 + trial * 13, 5'000'000, length / 2 + trial * 900));
      const auto windows = segment(s, WindowConfig{length});
      const std::vector<Event> events(s.events().begin(), s.events().end());
      const auto assignment = testing::window_assignment_oracle(events, length);
      REQUIRE(windows.size() == static_cast<std::size_t>((s.last_timestamp() - s.first_timestamp() + 1 + length - 1) / length));
      std::size_t i = 0;
      for (std::size_t k = 0; k < windows.size(); ++k) {
        const auto& w = windows[k];
        CHECK(w.window_end - w.window_start == length);
        for (const Event& e : w.events) {
          CHECK(assignment[i] == k);
          CHECK(e == events[i]);
          ++i;
        }
        if (!w.empty()) {
          CHECK(w.window_start <= w.t_begin);
          CHECK(w.t_begin <= w.t_end);
          CHECK(w.t_end < w.window_end);
        }
      }
      CHECK(i == events.size());
    }
  }
}

TEST_CASE("segment is unchanged by a ratio-1 truncation") {
  std::mt19937_64 rng(23);
  const EventStream s(kDvs128Geometry, testing::random_events(rng, kDvs128Geometry, 500, 0, 3000));
  const auto a = segment(s, {});
  const auto t = truncate_by_ratio(s, 1.0);
  const auto b = segment(t, {});
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].window_start == b[k].window_start);
    CHECK(std::equal(a[k].events.begin(), a[k].events.end(), b[k].events.begin(), b[k].events.end()));
  }
}
