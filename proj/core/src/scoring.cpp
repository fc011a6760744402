#include "evframe/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evframe/error.hpp"

namespace evframe {

std::size_t argmax(std::span<const double> values) {
  if (values.empty()) throw Error("argmax of an empty vector");
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] > values[best]) best = k;
  return best;
}

VideoPrediction temporal_average_pool(std::span<const ScoreVector> vectors, std::span<const std::string> class_names) {
  if (vectors.empty()) throw Error("no chunks to aggregate");
  const std::size_t k = vectors.front().scores.size();
  if (k == 0) throw Error("chunk " + std::to_string(vectors.front().chunk_index) + " has no scores");
  for (const ScoreVector& v : vectors) {
    if (v.scores.size() != k)
      throw Error("chunk " + std::to_string(v.chunk_index) + " has " + std::to_string(v.scores.size()) +
                  " scores, expected " + std::to_string(k));
    if (!std::all_of(v.scores.begin(), v.scores.end(), [](double s) { return std::isfinite(s); }))
      throw Error("chunk " + std::to_string(v.chunk_index) + " has a non-finite score");
  }
  if (!class_names.empty() && class_names.size() != k)
    throw Error(std::to_string(class_names.size()) + " class names for " + std::to_string(k) + " classes");

  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vectors[a].chunk_index < vectors[b].chunk_index; });

  // Neumaier-compensated sums.
  std::vector<double> sum(k, 0.0);
  std::vector<double> comp(k, 0.0);
  for (std::size_t i : order) {
    for (std::size_t c = 0; c < k; ++c) {
      const double x = vectors[i].scores[c];
      const double t = sum[c] + x;
      comp[c] += std::abs(sum[c]) >= std::abs(x) ? (sum[c] - t) + x : (x - t) + sum[c];
      sum[c] = t;
    }
  }

  VideoPrediction out;
  out.mean_scores.resize(k);
  const auto n = static_cast<double>(vectors.size());
  for (std::size_t c = 0; c < k; ++c) out.mean_scores[c] = (sum[c] + comp[c]) / n;

  out.label = argmax(out.mean_scores);
  if (!class_names.empty()) out.label_name = class_names[out.label];
  return out;
}

}  // namespace evframe
