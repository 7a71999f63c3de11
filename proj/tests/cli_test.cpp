#include <gtest/gtest.h>

#include <sstream>

#include "cinder/io.hpp"
#include "commands.hpp"
#include "test_support.hpp"

namespace cinder::cli {
namespace {

using testing::TempFile;

const char* kThreeBucketConfig =
    R"({"x_lcap": 0, "x_ucap": 1000, "n_bucket": 3, "w_min": 100, "theta_r": 0.5, "theta_s": 2, "lobby_size": 3})";

std::string lobby_line(const std::string& id, const std::string& ranks, int at = 0) {
  return R"({"id": ")" + id + R"(", "ranks": [)" + ranks + R"(], "enqueued_at": )" +
         std::to_string(at) + "}\n";
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream fs(line);
    std::string field;
    while (std::getline(fs, field, ',')) fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

struct Output {
  int status;
  std::string out;
  std::string err;
};

template <typename Fn>
Output capture(Fn&& fn) {
  std::ostringstream out, err;
  const int status = fn(out, err);
  return {status, out.str(), err.str()};
}

TEST(CmdScore, IdenticalLobbies) {
  TempFile config(kThreeBucketConfig);
  TempFile a(lobby_line("a", "10, 500, 990"));
  TempFile b(lobby_line("b", "990, 500, 10"));
  const Output r = capture([&](auto& o, auto& e) { return cmd_score(a.path(), b.path(), config.path(), o, e); });
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "id_a,id_b,sr,prefilter_pass,sanction\na,b,1,true,0\n");
}

TEST(CmdScore, CrossProduct) {
  TempFile config(kThreeBucketConfig);
  TempFile a(lobby_line("a1", "100, 100, 100") + lobby_line("a2", "1000, 1000, 1000"));
  TempFile b(lobby_line("b1", "0, 0, 0") + lobby_line("b2", "500, 500, 500") +
             lobby_line("b3", "1000, 1000, 1000"));
  const Output r = capture([&](auto& o, auto& e) { return cmd_score(a.path(), b.path(), config.path(), o, e); });
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& row : rows) EXPECT_EQ(row.size(), 5u);
  EXPECT_EQ(rows[3], (std::vector<std::string>{"a1", "b3", "0", "false", "6"}));
  EXPECT_EQ(rows[6], (std::vector<std::string>{"a2", "b3", "1", "true", "0"}));
}

TEST(CmdScore, MissingFile) {
  TempFile config(kThreeBucketConfig);
  TempFile a(lobby_line("a", "1, 2, 3"));
  const Output r = capture([&](auto& o, auto& e) {
    return cmd_score(a.path(), "/nonexistent/lobbies.jsonl", config.path(), o, e);
  });
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("/nonexistent/lobbies.jsonl"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CmdScore, SizeMismatchNamesBothLobbies) {
  TempFile config(kThreeBucketConfig);
  TempFile a(lobby_line("trio", "1, 2, 3"));
  TempFile b(lobby_line("duo", "1, 2"));
  const Output r = capture([&](auto& o, auto& e) { return cmd_score(a.path(), b.path(), config.path(), o, e); });
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("trio"), std::string::npos);
  EXPECT_NE(r.err.find("duo"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CmdScore, MalformedLineNamesFileAndLine) {
  TempFile config(kThreeBucketConfig);
  TempFile a(lobby_line("a", "1, 2, 3") + "{broken\n");
  const Output r = capture([&](auto& o, auto& e) { return cmd_score(a.path(), a.path(), config.path(), o, e); });
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find(a.path().string()), std::string::npos);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CmdBuckets, ThreeBuckets) {
  TempFile config(kThreeBucketConfig);
  const Output r = capture([&](auto& o, auto& e) { return cmd_buckets(config.path(), o, e); });
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "index,lower,upper,width\n0,0,450,450\n1,450,550,100\n2,550,1000,450\n");
}

TEST(CmdBuckets, SingleBucket) {
  TempFile config(R"({"x_lcap": 0, "x_ucap": 3000, "n_bucket": 1, "w_min": 150, "theta_r": 0.5, "theta_s": 2, "lobby_size": 5})");
  const Output r = capture([&](auto& o, auto& e) { return cmd_buckets(config.path(), o, e); });
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "index,lower,upper,width\n0,0,3000,3000\n");
}

TEST(CmdBuckets, InfeasibleConfig) {
  TempFile config(R"({"x_lcap": 0, "x_ucap": 1000, "n_bucket": 3, "w_min": 400, "theta_r": 0.5, "theta_s": 2, "lobby_size": 3})");
  const Output r = capture([&](auto& o, auto& e) { return cmd_buckets(config.path(), o, e); });
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
}

TEST(CmdMatch, TwoIdenticalLobbies) {
  TempFile config(kThreeBucketConfig);
  TempFile lobbies(lobby_line("a", "100, 100, 100", 1) + lobby_line("b", "100, 100, 100", 2));
  const Output r = capture([&](auto& o, auto& e) {
    return cmd_match(lobbies.path(), config.path(), MatchStrategy::kThreshold, o, e);
  });
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "lobby_a,lobby_b,ruzicka,sanction\na,b,1,0\n# prefilter=1 sanction=1\n");
}

TEST(CmdMatch, EmptyFile) {
  TempFile config(kThreeBucketConfig);
  TempFile lobbies("");
  const Output r = capture([&](auto& o, auto& e) {
    return cmd_match(lobbies.path(), config.path(), MatchStrategy::kArgmin, o, e);
  });
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "lobby_a,lobby_b,ruzicka,sanction\n# prefilter=0 sanction=0\n");
}

TEST(CmdMatch, ArgminPicksMinimum) {
  // Candidate "c" (indices {0,0}) against {2,2} (score 4) queued first and
  // {1,1} (score 2) queued second.
  TempFile config(R"({"x_lcap": 0, "x_ucap": 1000, "n_bucket": 3, "w_min": 100, "theta_r": 0, "theta_s": 10, "lobby_size": 2})");
  TempFile lobbies(lobby_line("c", "0, 0", 0) + lobby_line("score4", "1000, 1000", 1) +
                   lobby_line("score2", "500, 500", 2));
  const Output argmin = capture([&](auto& o, auto& e) {
    return cmd_match(lobbies.path(), config.path(), MatchStrategy::kArgmin, o, e);
  });
  ASSERT_EQ(argmin.status, 0) << argmin.err;
  auto rows = csv_rows(argmin.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], "c");
  EXPECT_EQ(rows[1][1], "score2");
  EXPECT_EQ(rows[1][3], "2");

  const Output threshold = capture([&](auto& o, auto& e) {
    return cmd_match(lobbies.path(), config.path(), MatchStrategy::kThreshold, o, e);
  });
  rows = csv_rows(threshold.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][1], "score4");
}

TEST(CmdMatch, DuplicateIdFails) {
  TempFile config(kThreeBucketConfig);
  TempFile lobbies(lobby_line("a", "1, 2, 3") + lobby_line("a", "1, 2, 3"));
  const Output r = capture([&](auto& o, auto& e) {
    return cmd_match(lobbies.path(), config.path(), MatchStrategy::kThreshold, o, e);
  });
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("already queued"), std::string::npos);
}

TEST(CmdSimulate, ZeroPairingsHeaderOnly) {
  TempFile out("");
  SimulateOptions options;
  options.pairings = 0;
  options.out = out.path();
  const Output r = capture([&](auto& o, auto& e) { return cmd_simulate(options, o, e); });
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(read_file(out.path()), "score,count\n# total=0\n");
  EXPECT_EQ(r.out, "# total=0\n");
}

TEST(CmdSimulate, SameSeedByteIdentical) {
  TempFile first(""), second("");
  SimulateOptions options;
  options.pairings = 50000;
  options.seed = 12;
  options.out = first.path();
  ASSERT_EQ(capture([&](auto& o, auto& e) { return cmd_simulate(options, o, e); }).status, 0);
  options.out = second.path();
  options.workers = 3;
  ASSERT_EQ(capture([&](auto& o, auto& e) { return cmd_simulate(options, o, e); }).status, 0);
  EXPECT_EQ(read_file(first.path()), read_file(second.path()));
  const auto rows = csv_rows(read_file(first.path()));
  ASSERT_GT(rows.size(), 1u);
  for (const auto& row : rows) EXPECT_EQ(row.size(), 2u);
}

TEST(CmdSimulate, ZeroSigmaSingleRow) {
  SimulateOptions options;
  options.pairings = 1000;
  options.gen_sigma = 0.0;
  const Output r = capture([&](auto& o, auto& e) { return cmd_simulate(options, o, e); });
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "score,count\n0,1000\n# total=1000\n# mean=0\n# median=0\n# mode=0\n");
}

TEST(CmdSimulate, BadConfigFails) {
  SimulateOptions options;
  options.config = "/nonexistent/config.json";
  EXPECT_NE(capture([&](auto& o, auto& e) { return cmd_simulate(options, o, e); }).status, 0);
  options.config.reset();
  options.gen_sigma = -1.0;
  EXPECT_NE(capture([&](auto& o, auto& e) { return cmd_simulate(options, o, e); }).status, 0);
}

TEST(Run, DispatchesSubcommands) {
  TempFile config(kThreeBucketConfig);
  const std::string path = config.path().string();
  const char* argv[] = {"cinder", "buckets", "--config", path.c_str()};
  const Output r = capture([&](auto& o, auto& e) { return run(4, argv, o, e); });
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(csv_rows(r.out).size(), 4u);

  const char* bad_strategy[] = {"cinder", "match", "x.jsonl", "--config", path.c_str(),
                                "--strategy", "best"};
  EXPECT_NE(capture([&](auto& o, auto& e) { return run(7, bad_strategy, o, e); }).status, 0);

  const char* none[] = {"cinder"};
  EXPECT_NE(capture([&](auto& o, auto& e) { return run(1, none, o, e); }).status, 0);
}

}  // namespace
}  // namespace cinder::cli
