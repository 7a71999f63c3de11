#pragma once

#include <cstddef>
#include <string>

namespace cinder {

/// Global parameter block shared by every stage of the pipeline.
///
/// The on-disk key names (x_lcap, n_bucket, ...) are listed in io.hpp.
struct RatingConfig {
  double lower_cap = 0.0;            // x_lcap
  double upper_cap = 3000.0;         // x_ucap
  int bucket_count = 20;             // n_bucket
  double min_bucket_width = 150.0;   // w_min
  double ruzicka_threshold = 0.3;    // theta_r, in [0, 1]
  double sanction_threshold = 10.0;  // theta_s, >= 0
  int lobby_size = 5;

  double rank_range() const noexcept { return upper_cap - lower_cap; }

  /// Throws ConfigError naming the first violated invariant. Infeasible
  /// bucket layouts raise InfeasibleConfigError.
  void validate() const;

  bool operator==(const RatingConfig&) const = default;
};

/// Clamps a raw rating into [lower_cap, upper_cap].
double clamp_rating(double rank, const RatingConfig& config) noexcept;

}  // namespace cinder
