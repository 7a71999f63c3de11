#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include "cinder/config.hpp"
#include "cinder/matchmaker.hpp"

namespace cinder::cli {

// Each command writes CSV to `out`, diagnostics to `err`, and returns the
// process exit status.

int cmd_score(const std::filesystem::path& lobbies_a, const std::filesystem::path& lobbies_b,
              const std::filesystem::path& config, std::ostream& out, std::ostream& err);

int cmd_buckets(const std::filesystem::path& config, std::ostream& out, std::ostream& err);

int cmd_match(const std::filesystem::path& lobbies, const std::filesystem::path& config,
              MatchStrategy strategy, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  std::uint64_t pairings = 1'000'000;
  std::uint64_t seed = 0;
  std::optional<double> gen_mu;
  std::optional<double> gen_sigma;
  std::optional<std::filesystem::path> config;  // built-in defaults when empty
  std::optional<std::filesystem::path> out;     // histogram to `out` stream when empty
  unsigned workers = 0;
};

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

/// Full command-line entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cinder::cli
