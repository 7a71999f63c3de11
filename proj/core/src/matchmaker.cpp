#include "cinder/matchmaker.hpp"

#include <algorithm>
#include <utility>

#include "cinder/errors.hpp"
#include "cinder/prefilter.hpp"

namespace cinder {

MatchStrategy parse_match_strategy(std::string_view name) {
  if (name == "threshold") return MatchStrategy::kThreshold;
  if (name == "argmin") return MatchStrategy::kArgmin;
  throw Error("unknown match strategy '" + std::string(name) + "' (expected threshold or argmin)");
}

std::string_view to_string(MatchStrategy strategy) noexcept {
  switch (strategy) {
    case MatchStrategy::kThreshold:
      return "threshold";
    case MatchStrategy::kArgmin:
      return "argmin";
  }
  return "unknown";
}

namespace {

RatingConfig validated(RatingConfig config) {
  config.validate();
  return config;
}

}  // namespace

MatchQueue::MatchQueue(RatingConfig config)
    : config_(validated(std::move(config))), scheme_(BucketScheme::build(config_)) {}

MatchQueue::Entry MatchQueue::make_entry(Lobby lobby) const {
  if (lobby.ranks.size() != static_cast<std::size_t>(config_.lobby_size)) {
    throw SizeMismatchError("lobby '" + lobby.id + "' has " + std::to_string(lobby.ranks.size()) +
                            " players, expected " + std::to_string(config_.lobby_size));
  }
  lobby = clamp_lobby(std::move(lobby), config_);
  Interval range = non_outlier_range(lobby, config_);
  std::vector<BucketIndex> indices = lobby_to_sorted_indices(lobby, scheme_);
  return Entry{std::move(lobby), range, std::move(indices)};
}

void MatchQueue::insert_ordered(Entry entry) {
  auto position = std::upper_bound(
      entries_.begin(), entries_.end(), entry.lobby.enqueued_at,
      [](std::int64_t at, const Entry& e) { return at < e.lobby.enqueued_at; });
  entries_.insert(position, std::move(entry));
}

void MatchQueue::enqueue(Lobby lobby) {
  if (ids_.contains(lobby.id)) throw QueueError("lobby '" + lobby.id + "' is already queued");
  Entry entry;
  try {
    entry = make_entry(std::move(lobby));
  } catch (const SizeMismatchError& e) {
    throw QueueError(e.what());
  }
  ids_.insert(entry.lobby.id);
  insert_ordered(std::move(entry));
}

MatchResult MatchQueue::take(std::size_t position, const Entry& candidate, double ruzicka,
                             SanctionScore sanction) {
  MatchResult result{candidate.lobby.id, entries_[position].lobby.id, ruzicka, sanction};
  ids_.erase(entries_[position].lobby.id);
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(position));
  return result;
}

std::optional<MatchResult> MatchQueue::match_threshold(const Entry& candidate) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    ++counters_.prefilter_evaluations;
    const double overlap = ruzicka_overlap(candidate.range, entries_[i].range);
    if (overlap < config_.ruzicka_threshold) continue;

    ++counters_.sanction_evaluations;
    const SanctionScore score =
        sanction_score_sorted(candidate.sorted_indices, entries_[i].sorted_indices);
    if (static_cast<double>(score) <= config_.sanction_threshold) {
      return take(i, candidate, overlap, score);
    }
  }
  return std::nullopt;
}

std::optional<MatchResult> MatchQueue::match_argmin(const Entry& candidate) {
  std::optional<std::size_t> best;
  double best_overlap = 0.0;
  SanctionScore best_score = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    ++counters_.prefilter_evaluations;
    const double overlap = ruzicka_overlap(candidate.range, entries_[i].range);
    if (overlap < config_.ruzicka_threshold) continue;

    ++counters_.sanction_evaluations;
    const SanctionScore score =
        sanction_score_sorted(candidate.sorted_indices, entries_[i].sorted_indices);
    // Entries are in (enqueued_at, insertion) order, so strict < keeps the
    // earliest of tied entries.
    if (!best || score < best_score) {
      best = i;
      best_overlap = overlap;
      best_score = score;
    }
  }
  if (!best) return std::nullopt;
  return take(*best, candidate, best_overlap, best_score);
}

std::optional<MatchResult> MatchQueue::find_match_threshold(const Lobby& candidate) {
  return match_threshold(make_entry(candidate));
}

std::optional<MatchResult> MatchQueue::find_match_argmin(const Lobby& candidate) {
  return match_argmin(make_entry(candidate));
}

std::optional<MatchResult> MatchQueue::find_match(const Lobby& candidate, MatchStrategy strategy) {
  return strategy == MatchStrategy::kThreshold ? find_match_threshold(candidate)
                                               : find_match_argmin(candidate);
}

std::vector<MatchResult> MatchQueue::match_pass(MatchStrategy strategy) {
  std::vector<MatchResult> matches;
  std::vector<Entry> unmatched;

  while (!entries_.empty()) {
    Entry head = std::move(entries_.front());
    entries_.pop_front();
    ids_.erase(head.lobby.id);

    auto match = strategy == MatchStrategy::kThreshold ? match_threshold(head) : match_argmin(head);
    if (match) {
      matches.push_back(std::move(*match));
    } else {
      unmatched.push_back(std::move(head));
    }
  }

  for (Entry& entry : unmatched) {
    ids_.insert(entry.lobby.id);
    entries_.push_back(std::move(entry));
  }
  return matches;
}

std::vector<Lobby> MatchQueue::lobbies() const {
  std::vector<Lobby> out;
  out.reserve(entries_.size());
  for (const Entry& entry : entries_) out.push_back(entry.lobby);
  return out;
}

}  // namespace cinder
