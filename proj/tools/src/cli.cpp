#include "evframe_cli/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "evframe/chunker.hpp"
#include "evframe/dvs_sim.hpp"
#include "evframe/error.hpp"
#include "evframe/events.hpp"
#include "evframe/frame_file.hpp"
#include "evframe/image_io.hpp"
#include "evframe/ingest.hpp"
#include "evframe/io.hpp"
#include "evframe/pipeline.hpp"
#include "evframe/score_file.hpp"
#include "evframe/scoring.hpp"

namespace evframe::cli {
namespace {

namespace fs = std::filesystem;

enum class StreamFormat { automatic, aedat, text };

struct StreamSource {
  StreamFormat format = StreamFormat::automatic;
  std::string layout = "dvs128";
  std::optional<std::uint32_t> width;
  std::optional<std::uint32_t> height;

  void add_options(CLI::App& cmd) {
    cmd.add_option("--format", format, "Input format (auto picks aedat for .aedat/.dat/.aer)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, StreamFormat>{
                {"auto", StreamFormat::automatic}, {"aedat", StreamFormat::aedat}, {"text", StreamFormat::text}},
            CLI::ignore_case));
    cmd.add_option("--layout", layout, "AEDAT address layout")->check(CLI::IsMember({"dvs128", "davis240"}));
    cmd.add_option("--width", width, "Sensor width (default from layout)")->check(CLI::Range(1u, 65536u));
    cmd.add_option("--height", height, "Sensor height (default from layout)")->check(CLI::Range(1u, 65536u));
  }

  AedatLayout aedat_layout() const { return layout == "davis240" ? AedatLayout::davis240() : AedatLayout::dvs128(); }

  SensorGeometry geometry() const {
    SensorGeometry g = layout == "davis240" ? kDavis240Geometry : kDvs128Geometry;
    if (width) g.width = *width;
    if (height) g.height = *height;
    return g;
  }
};

StreamFormat resolve_format(StreamFormat requested, const fs::path& path) {
  if (requested != StreamFormat::automatic) return requested;
  const auto ext = path.extension().string();
  return (ext == ".aedat" || ext == ".dat" || ext == ".aer") ? StreamFormat::aedat : StreamFormat::text;
}

struct LoadedStream {
  EventStream stream;
  StreamFormat format;
  std::optional<AedatParseStats> stats;
};

LoadedStream load_stream(const fs::path& path, const StreamSource& source) {
  LoadedStream loaded;
  loaded.format = resolve_format(source.format, path);
  try {
    if (loaded.format == StreamFormat::aedat) {
      AedatParseStats stats;
      loaded.stream = parse_aedat2(read_binary_file(path), source.aedat_layout(), source.geometry(), &stats);
      loaded.stats = stats;
    } else {
      loaded.stream = parse_text(read_text_file(path), source.geometry());
    }
  } catch (const ParseError& e) {
    throw Error(path.string() + ": " + e.what());
  }
  return loaded;
}

void save_stream(const fs::path& path, const EventStream& stream, StreamFormat format, const StreamSource& source) {
  if (resolve_format(format, path) == StreamFormat::aedat) {
    const auto bytes = write_aedat2(stream, source.aedat_layout());
    write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  } else {
    write_file(path, write_text(stream));
  }
}

std::string format_double(double v) {
  std::array<char, 64> buf;
  return std::string(buf.data(), std::to_chars(buf.data(), buf.data() + buf.size(), v).ptr);
}

void emit_text(const std::string& text, const std::optional<fs::path>& path, std::ostream& out) {
  if (path)
    write_file(*path, text);
  else
    out << text;
}

struct EncodeArgs {
  fs::path input;
  fs::path output;
  StreamSource source;
  std::int64_t window_us = 80'000;
  std::string kind = "timestamp";
  std::string polarity = "merged";
  std::optional<fs::path> image_dir;
  unsigned threads = 1;
};

void cmd_encode(const EncodeArgs& args, std::ostream& out) {
  const LoadedStream loaded = load_stream(args.input, args.source);
  EncodeOptions options;
  options.window.window_length_us = args.window_us;
  options.kind = args.kind == "count" ? FrameKind::event_count : FrameKind::timestamp;
  options.polarity = args.polarity == "ignore" ? PolarityMode::ignore : PolarityMode::merged;
  options.threads = args.threads;
  const FrameTensor tensor = encode_stream(loaded.stream, options);
  write_frame_file(args.output, tensor);

  if (args.image_dir) {
    fs::create_directories(*args.image_dir);
    std::array<char, 32> stem;
    for (std::size_t i = 0; i < tensor.frames.size(); ++i) {
      std::snprintf(stem.data(), stem.size(), "frame_%06zu", i);
      write_netpbm(*args.image_dir, stem.data(), tensor.frames[i]);
    }
  }
  out << "frames: " << tensor.frames.size() << '\n';
}

void cmd_chunk(const fs::path& input, const std::string& policy, const std::optional<fs::path>& output,
               std::ostream& out) {
  FrameTensor tensor;
  try {
    tensor = read_frame_file(input);
  } catch (const ParseError& e) {
    throw Error(input.string() + ": " + e.what());
  }
  const auto chunks = apply_empty_policy(make_chunks(tensor.frames),
                                         policy == "drop-empty" ? EmptyPolicy::drop_all_empty_chunks : EmptyPolicy::keep);
  std::string manifest;
  for (const Chunk& c : chunks) {
    for (std::size_t i = c.first; i <= c.index; ++i) {
      manifest += std::to_string(i);
      manifest += i == c.index ? '\n' : ' ';
    }
  }
  emit_text(manifest, output, out);
}

void cmd_aggregate(const fs::path& input, const std::optional<fs::path>& output, std::ostream& out) {
  ScoreFile file;
  try {
    file = parse_score_file(read_text_file(input));
  } catch (const ParseError& e) {
    throw Error(input.string() + ": " + e.what());
  }
  const VideoPrediction pred = temporal_average_pool(file.vectors, file.class_names);
  std::string text = "mean_scores: ";
  for (std::size_t k = 0; k < pred.mean_scores.size(); ++k) {
    if (k) text += ',';
    text += format_double(pred.mean_scores[k]);
  }
  text += "\nlabel: " + std::to_string(pred.label) + '\n';
  if (pred.label_name) text += "label_name: " + *pred.label_name + '\n';
  emit_text(text, output, out);
}

struct SimulateArgs {
  fs::path input;
  fs::path output;
  double threshold = 0.2;
  std::int64_t refractory_us = 0;
  StreamFormat out_format = StreamFormat::automatic;
  StreamSource sink;
};

void cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  FrameTensor tensor;
  try {
    tensor = read_frame_file(args.input);
  } catch (const ParseError& e) {
    throw Error(args.input.string() + ": " + e.what());
  }
  if (tensor.channels != 1) throw Error(args.input.string() + ": intensity input must have 1 channel");
  std::vector<IntensityFrame> frames;
  frames.reserve(tensor.frames.size());
  for (const EncodedFrame& f : tensor.frames) {
    IntensityFrame frame{f.width, f.height, {}, f.window_start};
    frame.values.reserve(f.pixels.size());
    for (std::uint8_t v : f.pixels) frame.values.push_back(1.0 + v);
    frames.push_back(std::move(frame));
  }
  const EventStream stream = simulate(frames, SimConfig{args.threshold, args.refractory_us});
  save_stream(args.output, stream, args.out_format, args.sink);
  out << "events: " << stream.size() << '\n';
}

void cmd_truncate(const fs::path& input, const fs::path& output, double ratio, const StreamSource& source,
                  StreamFormat out_format, std::ostream& out) {
  const LoadedStream loaded = load_stream(input, source);
  const EventStream cut = truncate_by_ratio(loaded.stream, ratio);
  save_stream(output, cut, out_format == StreamFormat::automatic ? loaded.format : out_format, source);
  out << "events: " << cut.size() << '\n';
}

void cmd_info(const fs::path& input, const StreamSource& source, std::ostream& out) {
  const LoadedStream loaded = load_stream(input, source);
  const EventStream& s = loaded.stream;
  std::size_t positive = 0;
  for (const Event& e : s.events()) positive += e.p > 0 ? 1 : 0;
  out << "format: " << (loaded.format == StreamFormat::aedat ? "aedat" : "text") << '\n'
      << "geometry: " << s.geometry().width << 'x' << s.geometry().height << '\n'
      << "events: " << s.size() << '\n'
      << "positive: " << positive << '\n'
      << "negative: " << s.size() - positive << '\n'
      << "duration_us: " << (s.empty() ? 0 : s.last_timestamp() - s.first_timestamp()) << '\n';
  if (!s.empty()) out << "first_us: " << s.first_timestamp() << '\n' << "last_us: " << s.last_timestamp() << '\n';
  if (loaded.stats) {
    out << "header_lines: " << loaded.stats->header_lines << '\n'
        << "records: " << loaded.stats->records << '\n'
        << "skipped_non_dvs: " << loaded.stats->skipped_non_dvs << '\n'
        << "timestamp_wraps: " << loaded.stats->timestamp_wraps << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Event-camera stream to frame toolkit", "evframe"};
  app.require_subcommand(1);

  const std::map<std::string, StreamFormat> out_formats{
      {"auto", StreamFormat::automatic}, {"aedat", StreamFormat::aedat}, {"text", StreamFormat::text}};

  EncodeArgs encode;
  auto* encode_cmd = app.add_subcommand("encode", "Window a stream and encode each window as a frame");
  encode_cmd->add_option("input", encode.input, "Event stream")->required()->check(CLI::ExistingFile);
  encode_cmd->add_option("-o,--output", encode.output, "Frame tensor output (EVFR)")->required();
  encode.source.add_options(*encode_cmd);
  encode_cmd->add_option("--window-us", encode.window_us, "Window length in microseconds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  encode_cmd->add_option("--kind", encode.kind, "Frame representation")
      ->capture_default_str()
      ->check(CLI::IsMember({"timestamp", "count"}));
  encode_cmd->add_option("--polarity", encode.polarity, "Polarity handling")
      ->capture_default_str()
      ->check(CLI::IsMember({"merged", "ignore"}));
  encode_cmd->add_option("--emit-images", encode.image_dir, "Also write frame_%06d.pgm/.ppm into this directory");
  encode_cmd->add_option("--threads", encode.threads, "Encoder threads")->capture_default_str()->check(CLI::Range(1u, 256u));

  fs::path chunk_input;
  std::string chunk_policy = "keep";
  std::optional<fs::path> chunk_output;
  auto* chunk_cmd = app.add_subcommand("chunk", "List the 3-frame chunks of a frame tensor");
  chunk_cmd->add_option("frames", chunk_input, "Frame tensor (EVFR)")->required()->check(CLI::ExistingFile);
  chunk_cmd->add_option("--policy", chunk_policy, "Empty-chunk policy")
      ->capture_default_str()
      ->check(CLI::IsMember({"keep", "drop-empty"}));
  chunk_cmd->add_option("-o,--output", chunk_output, "Manifest path (default stdout)");

  fs::path scores_input;
  std::optional<fs::path> aggregate_output;
  auto* aggregate_cmd = app.add_subcommand("aggregate", "Average per-chunk class scores into a video prediction");
  aggregate_cmd->add_option("scores", scores_input, "Score file")->required()->check(CLI::ExistingFile);
  aggregate_cmd->add_option("-o,--output", aggregate_output, "Prediction path (default stdout)");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Generate events from 8-bit intensity frames (I = 1 + v)");
  simulate_cmd->add_option("input", sim.input, "Intensity frame tensor (EVFR, 1 channel)")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("-o,--output", sim.output, "Event stream output")->required();
  simulate_cmd->add_option("--threshold", sim.threshold, "Contrast threshold (log intensity)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--refractory-us", sim.refractory_us, "Refractory period")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  simulate_cmd->add_option("--out-format", sim.out_format, "Output format")
      ->transform(CLI::CheckedTransformer(out_formats, CLI::ignore_case));
  simulate_cmd->add_option("--layout", sim.sink.layout, "AEDAT layout for aedat output")
      ->check(CLI::IsMember({"dvs128", "davis240"}));

  fs::path truncate_input;
  fs::path truncate_output;
  double ratio = 1.0;
  StreamSource truncate_source;
  StreamFormat truncate_out_format = StreamFormat::automatic;
  auto* truncate_cmd = app.add_subcommand("truncate", "Keep the first fraction of a stream's duration");
  truncate_cmd->add_option("input", truncate_input, "Event stream")->required()->check(CLI::ExistingFile);
  truncate_cmd->add_option("-o,--output", truncate_output, "Event stream output")->required();
  truncate_cmd->add_option("--ratio", ratio, "Observation ratio in (0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  truncate_source.add_options(*truncate_cmd);
  truncate_cmd->add_option("--out-format", truncate_out_format, "Output format (default: same as input)")
      ->transform(CLI::CheckedTransformer(out_formats, CLI::ignore_case));

  fs::path info_input;
  StreamSource info_source;
  auto* info_cmd = app.add_subcommand("info", "Summarize an event stream");
  info_cmd->add_option("input", info_input, "Event stream")->required()->check(CLI::ExistingFile);
  info_source.add_options(*info_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  if (*truncate_cmd && !(ratio > 0.0)) {
    err << "--ratio: must be greater than 0\n";
    return kUsageError;
  }

  try {
    if (*encode_cmd) cmd_encode(encode, out);
    if (*chunk_cmd) cmd_chunk(chunk_input, chunk_policy, chunk_output, out);
    if (*aggregate_cmd) cmd_aggregate(scores_input, aggregate_output, out);
    if (*simulate_cmd) cmd_simulate(sim, out);
    if (*truncate_cmd) cmd_truncate(truncate_input, truncate_output, ratio, truncate_source, truncate_out_format, out);
    if (*info_cmd) cmd_info(info_input, info_source, out);
  } catch (const Error& e) {
    err << "evframe: " << e.what() << '\n';
    return kDataError;
  } catch (const fs::filesystem_error& e) {
    err << "evframe: " << e.what() << '\n';
    return kDataError;
  }
  return kSuccess;
}

}  // namespace evframe::cli
