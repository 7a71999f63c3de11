#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cinder/bucketing.hpp"
#include "cinder/config.hpp"
#include "cinder/fairness.hpp"
#include "cinder/lobby.hpp"

namespace cinder {

enum class MatchStrategy {
  kThreshold,  // first FIFO entry with sanction <= theta_s
  kArgmin,     // global minimum sanction among stage-one passers
};

/// Parses "threshold" or "argmin"; throws Error otherwise.
MatchStrategy parse_match_strategy(std::string_view name);
std::string_view to_string(MatchStrategy strategy) noexcept;

struct MatchResult {
  std::string lobby_a;  // candidate
  std::string lobby_b;  // queued entry it was paired with
  double ruzicka = 0.0;
  SanctionScore sanction = 0;

  bool operator==(const MatchResult&) const = default;
};

struct OperationCounters {
  std::uint64_t prefilter_evaluations = 0;
  std::uint64_t sanction_evaluations = 0;

  bool operator==(const OperationCounters&) const = default;
};

/// FIFO queue of lobbies waiting for an opponent.
///
/// Entries stay ordered by enqueued_at, ties broken by insertion order. Each
/// entry caches its non-outlier range and sorted bucket indices, so a
/// stage-one check costs O(1) per pair.
///
/// Not internally synchronized: callers serialize enqueue and matching.
class MatchQueue {
 public:
  explicit MatchQueue(RatingConfig config);

  /// Throws QueueError on a duplicate id or a lobby whose size differs from
  /// lobby_size. Ranks are clamped on the way in.
  void enqueue(Lobby lobby);

  /// Scans entries in FIFO order and removes and returns the first one that
  /// passes the prefilter with sanction <= theta_s. The sanction score is only
  /// computed for entries that pass the prefilter.
  std::optional<MatchResult> find_match_threshold(const Lobby& candidate);

  /// Scores every prefilter passer and removes and returns the one with the
  /// lowest sanction, earliest entry first on ties.
  std::optional<MatchResult> find_match_argmin(const Lobby& candidate);

  std::optional<MatchResult> find_match(const Lobby& candidate, MatchStrategy strategy);

  /// Pops the head as a candidate and matches it against the rest until the
  /// queue is exhausted. Unmatched heads are put back afterwards in their
  /// original order.
  std::vector<MatchResult> match_pass(MatchStrategy strategy);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool contains(const std::string& id) const { return ids_.contains(id); }

  /// Queued lobbies in queue order.
  std::vector<Lobby> lobbies() const;
  /// Cached non-outlier range of the entry at `position`.
  const Interval& cached_range(std::size_t position) const { return entries_.at(position).range; }

  const OperationCounters& counters() const noexcept { return counters_; }
  const RatingConfig& config() const noexcept { return config_; }
  const BucketScheme& scheme() const noexcept { return scheme_; }

 private:
  struct Entry {
    Lobby lobby;
    Interval range;
    std::vector<BucketIndex> sorted_indices;
  };

  Entry make_entry(Lobby lobby) const;
  void insert_ordered(Entry entry);
  MatchResult take(std::size_t position, const Entry& candidate, double ruzicka,
                   SanctionScore sanction);
  std::optional<MatchResult> match_threshold(const Entry& candidate);
  std::optional<MatchResult> match_argmin(const Entry& candidate);

  RatingConfig config_;
  BucketScheme scheme_;
  std::deque<Entry> entries_;
  std::unordered_set<std::string> ids_;
  OperationCounters counters_;
};

}  // namespace cinder
