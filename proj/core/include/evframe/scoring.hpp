#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evframe {

struct ScoreVector {
  std::vector<double> scores;
  std::int64_t chunk_index = 0;
};

struct VideoPrediction {
  std::vector<double> mean_scores;
  std::size_t label = 0;
  std::optional<std::string> label_name;
};

/// Lowest index wins ties.
std::size_t argmax(std::span<const double> values);

/// Arithmetic mean of the score vectors, summed in chunk_index order so the
/// result does not depend on input order. Scores are used as given; no softmax.
VideoPrediction temporal_average_pool(std::span<const ScoreVector> vectors,
                                      std::span<const std::string> class_names = {});

}  // namespace evframe
