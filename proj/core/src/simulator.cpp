#include "cinder/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "cinder/bucketing.hpp"
#include "cinder/errors.hpp"
#include "cinder/io.hpp"

namespace cinder {

SimParams SimParams::with_default_generator(const RatingConfig& config) {
  SimParams params;
  params.config = config;
  params.gen_mean = (config.lower_cap + config.upper_cap) / 2.0;
  params.gen_stddev = config.rank_range() / 6.0;
  return params;
}

std::uint64_t partition_stream_seed(std::uint64_t seed, std::uint64_t partition) noexcept {
  std::uint64_t z = seed + (partition + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void LobbyGenerator::fill_ranks(std::span<double> ranks, const SimParams& params) {
  for (double& rank : ranks) {
    const double draw = params.gen_mean + params.gen_stddev * standard_normal_(engine_);
    rank = clamp_rating(draw, params.config);
  }
}

Lobby generate_lobby(LobbyGenerator& generator, const SimParams& params) {
  Lobby lobby;
  lobby.ranks.resize(static_cast<std::size_t>(params.config.lobby_size));
  generator.fill_ranks(lobby.ranks, params);
  return lobby;
}

void ScoreHistogram::add(SanctionScore score, std::uint64_t count) {
  if (score < 0) throw Error("negative sanction score");
  if (count == 0) return;
  counts[score] += count;
  total += count;
}

void ScoreHistogram::merge(const ScoreHistogram& other) {
  for (const auto& [score, count] : other.counts) add(score, count);
}

SummaryStats summarize(const ScoreHistogram& histogram) {
  if (histogram.total == 0) throw Error("summary statistics of an empty histogram are undefined");
  const double n = static_cast<double>(histogram.total);

  SummaryStats stats;
  std::uint64_t weighted_sum = 0;
  std::uint64_t best_count = 0;
  for (const auto& [score, count] : histogram.counts) {
    weighted_sum += static_cast<std::uint64_t>(score) * count;
    if (count > best_count) {
      best_count = count;
      stats.mode = score;
    }
  }
  stats.mean = static_cast<double>(weighted_sum) / n;

  const std::uint64_t half = (histogram.total + 1) / 2;
  std::uint64_t cumulative = 0;
  for (const auto& [score, count] : histogram.counts) {
    cumulative += count;
    if (cumulative >= half) {
      stats.median = static_cast<double>(score);
      break;
    }
  }

  double m2 = 0.0;
  double m3 = 0.0;
  for (const auto& [score, count] : histogram.counts) {
    const double d = static_cast<double>(score) - stats.mean;
    m2 += static_cast<double>(count) * d * d;
    m3 += static_cast<double>(count) * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  if (histogram.total >= 2 && m2 > 0.0) stats.skewness = m3 / std::pow(m2, 1.5);
  return stats;
}

namespace {

// Dense per-worker counts; index is the score.
void run_partition(std::uint64_t partition, const SimParams& params, const BucketScheme& scheme,
                   std::vector<std::uint64_t>& counts) {
  const std::uint64_t begin = partition * kPartitionSize;
  const std::uint64_t end = std::min(params.pairings, begin + kPartitionSize);
  const auto lobby_size = static_cast<std::size_t>(params.config.lobby_size);

  LobbyGenerator generator(partition_stream_seed(params.seed, partition));
  std::vector<double> ranks(lobby_size);
  std::vector<BucketIndex> a(lobby_size);
  std::vector<BucketIndex> b(lobby_size);
  for (std::uint64_t i = begin; i < end; ++i) {
    generator.fill_ranks(ranks, params);
    std::transform(ranks.begin(), ranks.end(), a.begin(),
                   [&](double r) { return scheme.bucket_of(r); });
    generator.fill_ranks(ranks, params);
    std::transform(ranks.begin(), ranks.end(), b.begin(),
                   [&](double r) { return scheme.bucket_of(r); });
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ++counts[static_cast<std::size_t>(sanction_score_sorted(a, b))];
  }
}

}  // namespace

ScoreHistogram run_simulation(const SimParams& params, unsigned workers) {
  params.config.validate();
  if (!(params.gen_stddev >= 0.0) || !std::isfinite(params.gen_stddev) ||
      !std::isfinite(params.gen_mean)) {
    throw ConfigError("generator mean must be finite and sigma nonnegative");
  }
  const BucketScheme scheme = BucketScheme::build(params.config);

  const std::uint64_t partitions = (params.pairings + kPartitionSize - 1) / kPartitionSize;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(partitions, 1)));

  const std::size_t max_score = static_cast<std::size_t>(params.config.lobby_size) *
                                static_cast<std::size_t>(params.config.bucket_count - 1);
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(max_score + 1, 0));

  auto work = [&](unsigned worker) {
    for (std::uint64_t p = worker; p < partitions; p += workers) {
      run_partition(p, params, scheme, partial[worker]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  ScoreHistogram histogram;
  for (std::size_t score = 0; score <= max_score; ++score) {
    std::uint64_t count = 0;
    for (const auto& counts : partial) count += counts[score];
    histogram.add(static_cast<SanctionScore>(score), count);
  }
  return histogram;
}

void write_summary_block(std::ostream& out, const ScoreHistogram& histogram) {
  out << "# total=" << histogram.total << '\n';
  if (histogram.total == 0) return;
  const SummaryStats stats = summarize(histogram);
  out << "# mean=" << format_number(stats.mean) << '\n';
  out << "# median=" << format_number(stats.median) << '\n';
  out << "# mode=" << stats.mode << '\n';
  if (stats.skewness) out << "# skewness=" << format_number(*stats.skewness) << '\n';
}

void write_histogram_csv(std::ostream& out, const ScoreHistogram& histogram) {
  out << "score,count\n";
  for (const auto& [score, count] : histogram.counts) out << score << ',' << count << '\n';
  write_summary_block(out, histogram);
}

}  // namespace cinder
