#include "cinder/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cinder/errors.hpp"

namespace cinder {
namespace {

using nlohmann::json;

template <typename T>
T field(const json& object, const char* key, std::size_t line) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(line, std::string("missing field '") + key + "'");
  try {
    if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_integer()) throw ParseError(line, std::string("field '") + key + "' must be an integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) throw ParseError(line, std::string("field '") + key + "' must be a number");
    } else {
      if (!it->is_string()) throw ParseError(line, std::string("field '") + key + "' must be a string");
    }
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ParseError(line, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

RatingConfig parse_config(std::string_view text) {
  json object;
  try {
    object = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("config is not valid JSON: ") + e.what());
  }
  if (!object.is_object()) throw ParseError(0, "config must be a JSON object");

  RatingConfig config;
  config.lower_cap = field<double>(object, "x_lcap", 0);
  config.upper_cap = field<double>(object, "x_ucap", 0);
  config.bucket_count = field<int>(object, "n_bucket", 0);
  config.min_bucket_width = field<double>(object, "w_min", 0);
  config.ruzicka_threshold = field<double>(object, "theta_r", 0);
  config.sanction_threshold = field<double>(object, "theta_s", 0);
  config.lobby_size = field<int>(object, "lobby_size", 0);
  config.validate();
  return config;
}

std::string serialize_config(const RatingConfig& config) {
  json object = {
      {"x_lcap", config.lower_cap},
      {"x_ucap", config.upper_cap},
      {"n_bucket", config.bucket_count},
      {"w_min", config.min_bucket_width},
      {"theta_r", config.ruzicka_threshold},
      {"theta_s", config.sanction_threshold},
      {"lobby_size", config.lobby_size},
  };
  return object.dump(2) + "\n";
}

namespace {

std::vector<Lobby> parse_lobbies(std::string_view text, const RatingConfig& config,
                                 bool check_size) {
  std::vector<Lobby> lobbies;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;

    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_number, std::string("malformed record: ") + e.what());
    }
    if (!object.is_object()) throw ParseError(line_number, "record must be a JSON object");

    Lobby lobby;
    lobby.id = field<std::string>(object, "id", line_number);
    lobby.enqueued_at = field<std::int64_t>(object, "enqueued_at", line_number);

    auto ranks = object.find("ranks");
    if (ranks == object.end() || !ranks->is_array()) {
      throw ParseError(line_number, "lobby '" + lobby.id + "': 'ranks' must be an array");
    }
    lobby.ranks.reserve(ranks->size());
    for (const json& rank : *ranks) {
      if (!rank.is_number()) {
        throw ParseError(line_number, "lobby '" + lobby.id + "': ranks must be numbers");
      }
      lobby.ranks.push_back(clamp_rating(rank.get<double>(), config));
    }
    if (check_size && lobby.ranks.size() != static_cast<std::size_t>(config.lobby_size)) {
      throw ParseError(line_number, "lobby '" + lobby.id + "' has " +
                                        std::to_string(lobby.ranks.size()) +
                                        " ranks, expected lobby_size " +
                                        std::to_string(config.lobby_size));
    }
    lobbies.push_back(std::move(lobby));
  }
  return lobbies;
}

}  // namespace

std::vector<Lobby> parse_lobby_file(std::string_view text, const RatingConfig& config) {
  return parse_lobbies(text, config, true);
}

std::vector<Lobby> parse_lobby_records(std::string_view text, const RatingConfig& config) {
  return parse_lobbies(text, config, false);
}

std::string serialize_lobbies(const std::vector<Lobby>& lobbies) {
  std::string out;
  for (const Lobby& lobby : lobbies) {
    json object = {{"id", lobby.id}, {"ranks", lobby.ranks}, {"enqueued_at", lobby.enqueued_at}};
    out += object.dump();
    out += '\n';
  }
  return out;
}

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buffer.data(), ptr);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

}  // namespace cinder
