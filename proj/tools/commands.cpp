#include "commands.hpp"

#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cinder/bucketing.hpp"
#include "cinder/errors.hpp"
#include "cinder/fairness.hpp"
#include "cinder/io.hpp"
#include "cinder/prefilter.hpp"
#include "cinder/simulator.hpp"

namespace cinder::cli {
namespace {

namespace fs = std::filesystem;

// Attaches the file name to any error raised while loading it.
class FileError : public Error {
 public:
  FileError(const fs::path& path, const std::string& what) : Error(path.string() + ": " + what) {}
};

template <typename Fn>
auto with_file(const fs::path& path, Fn&& fn) {
  try {
    return fn(read_file(path));
  } catch (const FileError&) {
    throw;
  } catch (const Error& e) {
    throw FileError(path, e.what());
  }
}

RatingConfig load_config(const fs::path& path) {
  return with_file(path, [](const std::string& text) { return parse_config(text); });
}

std::vector<Lobby> load_lobbies(const fs::path& path, const RatingConfig& config) {
  return with_file(path, [&](const std::string& text) { return parse_lobby_file(text, config); });
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int cmd_score(const fs::path& lobbies_a, const fs::path& lobbies_b, const fs::path& config_path,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RatingConfig config = load_config(config_path);
    auto records = [&](const fs::path& path) {
      return with_file(path, [&](const std::string& text) {
        return parse_lobby_records(text, config);
      });
    };
    const std::vector<Lobby> first = records(lobbies_a);
    const std::vector<Lobby> second = records(lobbies_b);
    const BucketScheme scheme = BucketScheme::build(config);

    // Validate everything before printing so a failure leaves no partial CSV.
    for (const Lobby& a : first) {
      for (const Lobby& b : second) {
        if (a.ranks.size() != b.ranks.size()) {
          throw SizeMismatchError("lobbies '" + a.id + "' (" + std::to_string(a.ranks.size()) +
                                  " players) and '" + b.id + "' (" +
                                  std::to_string(b.ranks.size()) + " players) differ in size");
        }
      }
    }
    for (const auto* lobbies : {&first, &second}) {
      for (const Lobby& lobby : *lobbies) {
        if (lobby.ranks.size() != static_cast<std::size_t>(config.lobby_size)) {
          throw SizeMismatchError("lobby '" + lobby.id + "' has " +
                                  std::to_string(lobby.ranks.size()) +
                                  " players, expected lobby_size " +
                                  std::to_string(config.lobby_size));
        }
      }
    }

    out << "id_a,id_b,sr,prefilter_pass,sanction\n";
    for (const Lobby& a : first) {
      const Interval range_a = non_outlier_range(a, config);
      for (const Lobby& b : second) {
        const double overlap = ruzicka_overlap(range_a, non_outlier_range(b, config));
        out << a.id << ',' << b.id << ',' << format_number(overlap) << ','
            << (overlap >= config.ruzicka_threshold ? "true" : "false") << ','
            << sanction_score_lobbies(a, b, scheme) << '\n';
      }
    }
    return 0;
  });
}

int cmd_buckets(const fs::path& config_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BucketScheme scheme = BucketScheme::build(load_config(config_path));
    out << "index,lower,upper,width\n";
    for (int i = 0; i < scheme.size(); ++i) {
      out << i << ',' << format_number(scheme.lower(i)) << ',' << format_number(scheme.upper(i))
          << ',' << format_number(scheme.widths()[i]) << '\n';
    }
    return 0;
  });
}

int cmd_match(const fs::path& lobby_path, const fs::path& config_path, MatchStrategy strategy,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RatingConfig config = load_config(config_path);
    MatchQueue queue(config);
    for (Lobby& lobby : load_lobbies(lobby_path, config)) {
      try {
        queue.enqueue(std::move(lobby));
      } catch (const QueueError& e) {
        throw FileError(lobby_path, e.what());
      }
    }
    const std::vector<MatchResult> matches = queue.match_pass(strategy);

    out << "lobby_a,lobby_b,ruzicka,sanction\n";
    for (const MatchResult& m : matches) {
      out << m.lobby_a << ',' << m.lobby_b << ',' << format_number(m.ruzicka) << ',' << m.sanction
          << '\n';
    }
    out << "# prefilter=" << queue.counters().prefilter_evaluations
        << " sanction=" << queue.counters().sanction_evaluations << '\n';
    return 0;
  });
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RatingConfig config;
    if (options.config) config = load_config(*options.config);
    config.validate();

    SimParams params = SimParams::with_default_generator(config);
    params.pairings = options.pairings;
    params.seed = options.seed;
    if (options.gen_mu) params.gen_mean = *options.gen_mu;
    if (options.gen_sigma) params.gen_stddev = *options.gen_sigma;

    const ScoreHistogram histogram = run_simulation(params, options.workers);
    if (options.out) {
      std::ofstream file(*options.out, std::ios::binary | std::ios::trunc);
      if (!file) throw Error("cannot open " + options.out->string() + " for writing");
      write_histogram_csv(file, histogram);
      if (!file.flush()) throw Error("failed writing " + options.out->string());
      write_summary_block(out, histogram);
    } else {
      write_histogram_csv(out, histogram);
    }
    return 0;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cinder: two-stage lobby matchmaking"};
  app.require_subcommand(1);

  std::string config;
  std::string first;
  std::string second;

  auto* score = app.add_subcommand("score", "Score every cross pair of two lobby files");
  score->add_option("lobbies_a", first, "First lobby file")->required();
  score->add_option("lobbies_b", second, "Second lobby file")->required();
  score->add_option("--config", config, "Config file")->required();

  auto* buckets = app.add_subcommand("buckets", "Print the bucket scheme as CSV");
  buckets->add_option("--config", config, "Config file")->required();

  std::string strategy = "threshold";
  auto* match = app.add_subcommand("match", "Run one match pass over a lobby file");
  match->add_option("lobbies", first, "Lobby file")->required();
  match->add_option("--config", config, "Config file")->required();
  match->add_option("--strategy", strategy, "threshold or argmin")
      ->check(CLI::IsMember({"threshold", "argmin"}));

  SimulateOptions sim;
  std::string sim_config;
  std::string sim_out;
  auto* simulate = app.add_subcommand("simulate", "Histogram sanction scores of random pairings");
  simulate->add_option("--pairings", sim.pairings, "Number of random pairings");
  simulate->add_option("--seed", sim.seed, "Random seed");
  simulate->add_option("--gen-mu", sim.gen_mu, "Generator mean (default: range midpoint)");
  simulate->add_option("--gen-sigma", sim.gen_sigma, "Generator sigma (default: range / 6)")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--config", sim_config, "Config file (default: built-in)");
  simulate->add_option("--out", sim_out, "Histogram CSV path (default: stdout)");
  simulate->add_option("--workers", sim.workers, "Worker threads, 0 = hardware concurrency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (*score) return cmd_score(first, second, config, out, err);
  if (*buckets) return cmd_buckets(config, out, err);
  if (*match) return cmd_match(first, config, parse_match_strategy(strategy), out, err);
  if (!sim_config.empty()) sim.config = sim_config;
  if (!sim_out.empty()) sim.out = sim_out;
  return cmd_simulate(sim, out, err);
}

}  // namespace cinder::cli
