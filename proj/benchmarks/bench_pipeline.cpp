#include <benchmark/benchmark.h>

#include <random>

#include "evframe/dvs_sim.hpp"
#include "evframe/ingest.hpp"
#include "evframe/pipeline.hpp"

namespace {

evframe::EventStream synthetic_stream(std::size_t n, evframe::SensorGeometry g) {
  std::mt19937_64 rng(1);
  std::vector<evframe::Event> events;
  events.reserve(n);
  evframe::Timestamp t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t r = rng();
    t += static_cast<evframe::Timestamp>(r & 3);
    events.push_back({t, static_cast<std::uint16_t>((r >> 8) % g.width), static_cast<std::uint16_t>((r >> 24) % g.height),
                      static_cast<std::int8_t>((r >> 40) & 1 ? 1 : -1)});
  }
  return evframe::EventStream(g, std::move(events));
}

const evframe::EventStream& dvs128_stream() {
  static const auto s = synthetic_stream(2'000'000, evframe::kDvs128Geometry);
  return s;
}

}  // namespace

static void BM_ParseAedat(benchmark::State& state) {
  const auto bytes = evframe::write_aedat2(dvs128_stream(), evframe::AedatLayout::dvs128());
  for (auto _ : state) {
    auto s = evframe::parse_aedat2(bytes, evframe::AedatLayout::dvs128(), evframe::kDvs128Geometry);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dvs128_stream().size()));
}
BENCHMARK(BM_ParseAedat)->Unit(benchmark::kMillisecond);

static void BM_ParseText(benchmark::State& state) {
  const auto text = evframe::write_text(dvs128_stream());
  for (auto _ : state) {
    auto s = evframe::parse_text(text, evframe::kDvs128Geometry);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dvs128_stream().size()));
}
BENCHMARK(BM_ParseText)->Unit(benchmark::kMillisecond);

static void BM_EncodeStream(benchmark::State& state) {
  evframe::EncodeOptions options;
  options.window.window_length_us = state.range(0);
  options.kind = state.range(1) ? evframe::FrameKind::event_count : evframe::FrameKind::timestamp;
  for (auto _ : state) {
    auto t = evframe::encode_stream(dvs128_stream(), options);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dvs128_stream().size()));
}
BENCHMARK(BM_EncodeStream)
    ->ArgsProduct({{20'000, 50'000, 80'000}, {0, 1}})
    ->ArgNames({"window_us", "count"})
    ->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> level(1.0, 256.0);
  std::vector<evframe::IntensityFrame> frames;
  for (int k = 0; k < 10; ++k) {
    evframe::IntensityFrame f{side, side, {}, k * 33'333};
    for (std::uint32_t i = 0; i < side * side; ++i) f.values.push_back(level(rng));
    frames.push_back(std::move(f));
  }
  for (auto _ : state) {
    auto s = evframe::simulate(frames, evframe::SimConfig{0.2, 0});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Simulate)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
