#pragma once

#include <cstdint>
#include <span>

#include "cinder/bucketing.hpp"
#include "cinder/lobby.hpp"

namespace cinder {

using SanctionScore = std::int64_t;

/// 1D Wasserstein (W1) distance between two equal-size lists of bucket
/// indices: sum of |u_(i) - v_(i)| over the sorted lists. Inputs are not
/// modified. Throws SizeMismatchError on unequal lengths.
SanctionScore sanction_score(std::span<const BucketIndex> u, std::span<const BucketIndex> v);

/// Same as sanction_score, for inputs the caller has already sorted.
SanctionScore sanction_score_sorted(std::span<const BucketIndex> u,
                                    std::span<const BucketIndex> v) noexcept;

SanctionScore sanction_score_lobbies(const Lobby& a, const Lobby& b, const BucketScheme& scheme);

inline constexpr std::size_t kAssignmentOracleMaxSize = 8;

/// Minimum-cost perfect matching between u and v under |u_i - v_j|, found by
/// enumerating every permutation. Independent of the sorted-pairing route and
/// meant for checking it. Throws Error when the lists exceed
/// kAssignmentOracleMaxSize and SizeMismatchError when they differ in length.
SanctionScore assignment_oracle(std::span<const BucketIndex> u, std::span<const BucketIndex> v);

}  // namespace cinder
