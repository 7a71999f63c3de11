#pragma once

#include <span>

#include "cinder/config.hpp"
#include "cinder/lobby.hpp"

namespace cinder {

/// Intermediates of the non-outlier range computation.
struct RankSpread {
  double mean = 0.0;
  double stddev = 0.0;          // population standard deviation
  double floored_stddev = 0.0;  // max(stddev, rank_range / bucket_count)
};

/// Mean, population standard deviation and the width-floored deviation of a
/// nonempty rank list.
RankSpread rank_spread(std::span<const double> ranks, const RatingConfig& config);

/// mean +/- floored_stddev, clipped to the config caps. The floor keeps the
/// range from collapsing when every player has nearly the same rank.
Interval non_outlier_range(std::span<const double> ranks, const RatingConfig& config);
Interval non_outlier_range(const Lobby& lobby, const RatingConfig& config);

/// Ruzicka (continuous Jaccard) similarity of two intervals: length of the
/// intersection over length of the union, in [0, 1]. Two coincident
/// zero-width intervals score 1.
double ruzicka_overlap(const Interval& a, const Interval& b) noexcept;

/// Stage-one gate: true when the lobbies' non-outlier ranges overlap by at
/// least ruzicka_threshold.
bool passes_prefilter(const Lobby& a, const Lobby& b, const RatingConfig& config);

}  // namespace cinder
