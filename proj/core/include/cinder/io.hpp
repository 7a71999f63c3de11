#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cinder/config.hpp"
#include "cinder/lobby.hpp"

namespace cinder {

// Config files are a single JSON object with the keys
//   x_lcap, x_ucap, n_bucket, w_min, theta_r, theta_s, lobby_size
// Lobby files hold one JSON object per line:
//   {"id": "...", "ranks": [...], "enqueued_at": <int>}

RatingConfig parse_config(std::string_view text);
std::string serialize_config(const RatingConfig& config);

/// Decodes a lobby file. Blank lines are skipped. Ranks are clamped, and a
/// rank list whose length differs from lobby_size is a ParseError naming the
/// lobby id.
std::vector<Lobby> parse_lobby_file(std::string_view text, const RatingConfig& config);

/// Like parse_lobby_file but without the lobby_size check; for callers that
/// report size problems themselves.
std::vector<Lobby> parse_lobby_records(std::string_view text, const RatingConfig& config);

/// One line per lobby, each terminated by '\n'.
std::string serialize_lobbies(const std::vector<Lobby>& lobbies);

/// Shortest decimal text that parses back to exactly `value`. Locale
/// independent.
std::string format_number(double value);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace cinder
