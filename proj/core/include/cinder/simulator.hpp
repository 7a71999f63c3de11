#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <span>

#include "cinder/config.hpp"
#include "cinder/fairness.hpp"
#include "cinder/lobby.hpp"

namespace cinder {

/// Parameters of a Monte-Carlo run over random lobby pairings.
struct SimParams {
  std::uint64_t pairings = 1'000'000;
  std::uint64_t seed = 0;
  double gen_mean = 1500.0;
  double gen_stddev = 500.0;
  RatingConfig config;

  /// Generator centred on the rank range with sigma = range / 6.
  static SimParams with_default_generator(const RatingConfig& config);
};

/// Pairings per partition. Partition p covers [p * kPartitionSize,
/// (p + 1) * kPartitionSize) and draws from its own stream, so results do not
/// depend on how partitions are spread over workers.
inline constexpr std::uint64_t kPartitionSize = 1u << 16;

/// SplitMix64 finalizer applied to (seed, partition); seeds one
/// std::mt19937_64 per partition.
std::uint64_t partition_stream_seed(std::uint64_t seed, std::uint64_t partition) noexcept;

/// Draws clamped normal ratings. Every draw consumes exactly one standard
/// normal variate, including when gen_stddev is zero.
class LobbyGenerator {
 public:
  explicit LobbyGenerator(std::uint64_t stream_seed) : engine_(stream_seed) {}

  void fill_ranks(std::span<double> ranks, const SimParams& params);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> standard_normal_{0.0, 1.0};
};

Lobby generate_lobby(LobbyGenerator& generator, const SimParams& params);

/// Counts of integer sanction scores.
struct ScoreHistogram {
  std::map<SanctionScore, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(SanctionScore score, std::uint64_t count = 1);
  void merge(const ScoreHistogram& other);

  bool operator==(const ScoreHistogram&) const = default;
};

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  SanctionScore mode = 0;
  /// Moment coefficient g1 = m3 / m2^1.5. Empty for fewer than two samples or
  /// zero variance.
  std::optional<double> skewness;
};

/// Throws Error on an empty histogram.
SummaryStats summarize(const ScoreHistogram& histogram);

/// Runs params.pairings pairings. `workers` == 0 picks the hardware
/// concurrency; the result is identical for every worker count.
ScoreHistogram run_simulation(const SimParams& params, unsigned workers = 0);

/// `score,count` rows ascending by score, then `# total=`, `# mean=`,
/// `# median=`, `# mode=`, `# skewness=` comment lines. Statistics that are
/// undefined for the histogram are left out.
void write_histogram_csv(std::ostream& out, const ScoreHistogram& histogram);

/// Just the comment-line summary block.
void write_summary_block(std::ostream& out, const ScoreHistogram& histogram);

}  // namespace cinder
