#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evframe/scoring.hpp"

namespace evframe {

/// Text score file:
///   # <K> [name_0 ... name_{K-1}]
///   <chunk_index>,<s_0>,...,<s_{K-1}>
/// chunk_index strictly increasing.
struct ScoreFile {
  std::size_t num_classes = 0;
  std::vector<std::string> class_names;  // empty or exactly num_classes
  std::vector<ScoreVector> vectors;
};

ScoreFile parse_score_file(std::string_view text);
std::string write_score_file(const ScoreFile& file);

}  // namespace evframe
