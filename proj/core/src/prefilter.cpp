#include "cinder/prefilter.hpp"

#include <algorithm>
#include <cmath>

#include "cinder/errors.hpp"

namespace cinder {

RankSpread rank_spread(std::span<const double> ranks, const RatingConfig& config) {
  if (ranks.empty()) throw Error("rank_spread: lobby has no ranks");
  const double n = static_cast<double>(ranks.size());

  double sum = 0.0;
  for (double rank : ranks) sum += rank;
  const double mean = sum / n;

  double squares = 0.0;
  for (double rank : ranks) squares += (rank - mean) * (rank - mean);
  const double stddev = std::sqrt(squares / n);

  const double floor = config.rank_range() / static_cast<double>(config.bucket_count);
  return {mean, stddev, std::max(stddev, floor)};
}

Interval non_outlier_range(std::span<const double> ranks, const RatingConfig& config) {
  const RankSpread spread = rank_spread(ranks, config);
  return {std::max(spread.mean - spread.floored_stddev, config.lower_cap),
          std::min(spread.mean + spread.floored_stddev, config.upper_cap)};
}

Interval non_outlier_range(const Lobby& lobby, const RatingConfig& config) {
  return non_outlier_range(lobby.ranks, config);
}

double ruzicka_overlap(const Interval& a, const Interval& b) noexcept {
  const double intersection =
      std::max(0.0, std::min(a.upper, b.upper) - std::max(a.lower, b.lower));
  const double united = a.length() + b.length() - intersection;
  if (united <= 0.0) return a == b ? 1.0 : 0.0;
  return std::clamp(intersection / united, 0.0, 1.0);
}

bool passes_prefilter(const Lobby& a, const Lobby& b, const RatingConfig& config) {
  return ruzicka_overlap(non_outlier_range(a, config), non_outlier_range(b, config)) >=
         config.ruzicka_threshold;
}

}  // namespace cinder
