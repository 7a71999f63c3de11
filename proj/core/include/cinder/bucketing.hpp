#pragma once

#include <span>
#include <vector>

#include "cinder/config.hpp"
#include "cinder/lobby.hpp"

namespace cinder {

using BucketIndex = int;

/// Non-uniform partition of [lower_cap, upper_cap] into bucket_count
/// buckets, narrowest at the center of the rank range.
///
/// Bucket i covers [boundaries[i], boundaries[i+1]); the last bucket is
/// closed above so upper_cap maps to bucket_count - 1.
class BucketScheme {
 public:
  /// Widths follow an inverted standard normal PDF sampled at uniformly
  /// spaced proxy positions spanning z in (-3, 3):
  ///
  ///   W_i = w_min + (phi(0) - phi(z_i)) * (R - n * w_min) / sum_j (phi(0) - phi(z_j))
  ///
  /// so every bucket is at least w_min wide and the widths sum to R.
  /// Throws InfeasibleConfigError when n * w_min > R.
  static BucketScheme build(const RatingConfig& config);

  int size() const noexcept { return static_cast<int>(widths_.size()); }
  std::span<const double> boundaries() const noexcept { return boundaries_; }
  std::span<const double> widths() const noexcept { return widths_; }
  double lower(int index) const { return boundaries_.at(index); }
  double upper(int index) const { return boundaries_.at(index + 1); }

  /// Index of the bucket containing `rank`. Ranks outside the caps land in
  /// the first or last bucket.
  BucketIndex bucket_of(double rank) const noexcept;

 private:
  BucketScheme(std::vector<double> boundaries, std::vector<double> widths);

  std::vector<double> boundaries_;
  std::vector<double> widths_;
};

/// Proxy z position of bucket `index` out of `count`.
double bucket_proxy_position(int index, int count) noexcept;

inline BucketScheme build_bucket_scheme(const RatingConfig& config) {
  return BucketScheme::build(config);
}

inline BucketIndex rank_to_bucket(double rank, const BucketScheme& scheme) noexcept {
  return scheme.bucket_of(rank);
}

/// Bucket index of every rank in the lobby, sorted ascending.
std::vector<BucketIndex> lobby_to_sorted_indices(std::span<const double> ranks,
                                                 const BucketScheme& scheme);
std::vector<BucketIndex> lobby_to_sorted_indices(const Lobby& lobby, const BucketScheme& scheme);

}  // namespace cinder
