#include "evframe/score_file.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "evframe/error.hpp"

namespace evframe {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename Num>
bool parse_num(std::string_view s, Num& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

ScoreFile parse_score_file(std::string_view text) {
  using Where = ParseError::Where;
  ScoreFile file;
  bool have_header = false;
  std::uint64_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (have_header) continue;  // later '#' lines are comments
      const auto fields = split_ws(trim(line.substr(1)));
      if (fields.empty() || !parse_num(fields[0], file.num_classes) || file.num_classes == 0)
        throw ParseError("header must start with the class count", Where::line, line_no);
      if (fields.size() > 1) {
        if (fields.size() - 1 != file.num_classes)
          throw ParseError("header names " + std::to_string(fields.size() - 1) + " classes, declares " +
                               std::to_string(file.num_classes),
                           Where::line, line_no);
        for (std::size_t i = 1; i < fields.size(); ++i) file.class_names.emplace_back(fields[i]);
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("score line before the '# K' header", Where::line, line_no);

    const auto fields = split(line, ',');
    if (fields.size() != file.num_classes + 1)
      throw ParseError("expected chunk index and " + std::to_string(file.num_classes) + " scores", Where::line, line_no);
    ScoreVector v;
    if (!parse_num(fields[0], v.chunk_index)) throw ParseError("bad chunk index", Where::line, line_no);
    if (!file.vectors.empty() && v.chunk_index <= file.vectors.back().chunk_index)
      throw ParseError("chunk index not strictly increasing", Where::line, line_no);
    v.scores.resize(file.num_classes);
    for (std::size_t k = 0; k < file.num_classes; ++k)
      if (!parse_num(fields[k + 1], v.scores[k]) || !std::isfinite(v.scores[k]))
        throw ParseError("bad score in column " + std::to_string(k + 1), Where::line, line_no);
    file.vectors.push_back(std::move(v));
  }
  if (!have_header) throw ParseError("missing '# K' header", Where::line, line_no);
  return file;
}

std::string write_score_file(const ScoreFile& file) {
  std::string out = "# " + std::to_string(file.num_classes);
  for (const auto& name : file.class_names) out += " " + name;
  out += '\n';
  std::array<char, 64> buf;
  for (const ScoreVector& v : file.vectors) {
    out += std::to_string(v.chunk_index);
    for (double s : v.scores) {
      out += ',';
      out.append(buf.data(), std::to_chars(buf.data(), buf.data() + buf.size(), s).ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace evframe
