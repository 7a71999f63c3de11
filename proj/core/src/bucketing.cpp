#include "cinder/bucketing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cinder/errors.hpp"

namespace cinder {
namespace {

double standard_normal_pdf(double z) noexcept {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

double bucket_proxy_position(int index, int count) noexcept {
  // 6 * ((i + 0.5) / n - 0.5), written with an integer numerator so that
  // positions i and n-1-i are exact negatives of each other.
  return 3.0 * static_cast<double>(2 * index + 1 - count) / static_cast<double>(count);
}

BucketScheme::BucketScheme(std::vector<double> boundaries, std::vector<double> widths)
    : boundaries_(std::move(boundaries)), widths_(std::move(widths)) {}

BucketScheme BucketScheme::build(const RatingConfig& config) {
  if (config.bucket_count < 1) throw ConfigError("n_bucket must be at least 1");
  if (!(config.lower_cap < config.upper_cap)) throw ConfigError("x_lcap must be below x_ucap");
  if (!(config.min_bucket_width > 0.0)) throw ConfigError("w_min must be positive");

  const int n = config.bucket_count;
  const double total = config.rank_range();
  const double distributable = total - static_cast<double>(n) * config.min_bucket_width;
  if (distributable < 0.0) {
    throw InfeasibleConfigError("infeasible bucket scheme: n_bucket * w_min = " +
                                std::to_string(n * config.min_bucket_width) +
                                " exceeds the rank range " + std::to_string(total));
  }

  if (n == 1) return BucketScheme({config.lower_cap, config.upper_cap}, {total});

  const double peak = standard_normal_pdf(0.0);
  std::vector<double> deficits(n);
  for (int i = 0; i < n; ++i) deficits[i] = peak - standard_normal_pdf(bucket_proxy_position(i, n));

  // Sum outside-in so the total does not depend on summation direction.
  double deficit_sum = 0.0;
  for (int i = 0; i < n / 2; ++i) deficit_sum += deficits[i] + deficits[n - 1 - i];
  if (n % 2 == 1) deficit_sum += deficits[n / 2];

  std::vector<double> widths(n);
  for (int i = 0; i < n; ++i) {
    widths[i] = config.min_bucket_width + deficits[i] * (distributable / deficit_sum);
  }

  std::vector<double> boundaries(n + 1);
  boundaries[0] = config.lower_cap;
  for (int i = 0; i < n; ++i) boundaries[i + 1] = boundaries[i] + widths[i];
  boundaries[n] = config.upper_cap;
  return BucketScheme(std::move(boundaries), std::move(widths));
}

BucketIndex BucketScheme::bucket_of(double rank) const noexcept {
  // First boundary strictly above rank; the bucket starts one before it.
  auto it = std::upper_bound(boundaries_.begin() + 1, boundaries_.end() - 1, rank);
  return static_cast<BucketIndex>(it - boundaries_.begin()) - 1;
}

std::vector<BucketIndex> lobby_to_sorted_indices(std::span<const double> ranks,
                                                 const BucketScheme& scheme) {
  std::vector<BucketIndex> indices;
  indices.reserve(ranks.size());
  for (double rank : ranks) indices.push_back(scheme.bucket_of(rank));
  std::sort(indices.begin(), indices.end());
  return indices;
}

std::vector<BucketIndex> lobby_to_sorted_indices(const Lobby& lobby, const BucketScheme& scheme) {
  return lobby_to_sorted_indices(lobby.ranks, scheme);
}

}  // namespace cinder
