#include "cinder/fairness.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "cinder/errors.hpp"

namespace cinder {
namespace {

void require_same_size(std::size_t u, std::size_t v) {
  if (u != v) {
    throw SizeMismatchError("cannot compare index lists of sizes " + std::to_string(u) + " and " +
                            std::to_string(v));
  }
}

}  // namespace

SanctionScore sanction_score_sorted(std::span<const BucketIndex> u,
                                    std::span<const BucketIndex> v) noexcept {
  SanctionScore score = 0;
  for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
    score += std::abs(static_cast<SanctionScore>(u[i]) - v[i]);
  }
  return score;
}

SanctionScore sanction_score(std::span<const BucketIndex> u, std::span<const BucketIndex> v) {
  require_same_size(u.size(), v.size());
  std::vector<BucketIndex> sorted_u(u.begin(), u.end());
  std::vector<BucketIndex> sorted_v(v.begin(), v.end());
  std::sort(sorted_u.begin(), sorted_u.end());
  std::sort(sorted_v.begin(), sorted_v.end());
  return sanction_score_sorted(sorted_u, sorted_v);
}

SanctionScore sanction_score_lobbies(const Lobby& a, const Lobby& b, const BucketScheme& scheme) {
  if (a.ranks.size() != b.ranks.size()) {
    throw SizeMismatchError("lobbies '" + a.id + "' (" + std::to_string(a.ranks.size()) +
                            " players) and '" + b.id + "' (" + std::to_string(b.ranks.size()) +
                            " players) differ in size");
  }
  return sanction_score_sorted(lobby_to_sorted_indices(a, scheme),
                               lobby_to_sorted_indices(b, scheme));
}

SanctionScore assignment_oracle(std::span<const BucketIndex> u, std::span<const BucketIndex> v) {
  require_same_size(u.size(), v.size());
  if (u.size() > kAssignmentOracleMaxSize) {
    throw Error("assignment_oracle: " + std::to_string(u.size()) + " elements exceeds the limit of " +
                std::to_string(kAssignmentOracleMaxSize));
  }
  std::vector<std::size_t> permutation(v.size());
  std::iota(permutation.begin(), permutation.end(), std::size_t{0});

  SanctionScore best = std::numeric_limits<SanctionScore>::max();
  do {
    SanctionScore cost = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      cost += std::abs(static_cast<SanctionScore>(u[i]) - v[permutation[i]]);
    }
    best = std::min(best, cost);
  } while (std::next_permutation(permutation.begin(), permutation.end()));
  return best;
}

}  // namespace cinder
