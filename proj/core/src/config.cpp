#include "cinder/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cinder/errors.hpp"

namespace cinder {

void RatingConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("invalid config: ") + what);
  };
  require(std::isfinite(lower_cap) && std::isfinite(upper_cap), "caps must be finite");
  require(lower_cap < upper_cap, "x_lcap must be below x_ucap");
  require(bucket_count >= 1, "n_bucket must be at least 1");
  require(std::isfinite(min_bucket_width) && min_bucket_width > 0.0, "w_min must be positive");
  require(ruzicka_threshold >= 0.0 && ruzicka_threshold <= 1.0, "theta_r must lie in [0, 1]");
  require(std::isfinite(sanction_threshold) && sanction_threshold >= 0.0,
          "theta_s must be nonnegative");
  require(lobby_size >= 1, "lobby_size must be at least 1");
  if (static_cast<double>(bucket_count) * min_bucket_width > rank_range()) {
    throw InfeasibleConfigError("infeasible config: n_bucket * w_min exceeds x_ucap - x_lcap");
  }
}

double clamp_rating(double rank, const RatingConfig& config) noexcept {
  return std::min(std::max(rank, config.lower_cap), config.upper_cap);
}

}  // namespace cinder
