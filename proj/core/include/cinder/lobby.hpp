#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cinder/config.hpp"

namespace cinder {

/// A pre-made team waiting for a match.
struct Lobby {
  std::string id;
  std::vector<double> ranks;
  std::int64_t enqueued_at = 0;

  bool operator==(const Lobby&) const = default;
};

/// Closed rating range [lower, upper].
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double length() const noexcept { return upper - lower; }

  bool operator==(const Interval&) const = default;
};

/// Returns a copy of `lobby` with every rank clamped to the config caps.
Lobby clamp_lobby(Lobby lobby, const RatingConfig& config);

}  // namespace cinder
