#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cinder/bucketing.hpp"
#include "cinder/errors.hpp"
#include "test_support.hpp"

namespace cinder {
namespace {

using testing::make_config;
using testing::three_bucket_config;

TEST(BucketScheme, SingleBucketSpansCaps) {
  const BucketScheme scheme = build_bucket_scheme(make_config(0, 3000, 1, 150));
  ASSERT_EQ(scheme.size(), 1);
  EXPECT_EQ(std::vector<double>(scheme.boundaries().begin(), scheme.boundaries().end()),
            (std::vector<double>{0, 3000}));
  EXPECT_EQ(scheme.widths()[0], 3000);
  EXPECT_EQ(rank_to_bucket(0, scheme), 0);
  EXPECT_EQ(rank_to_bucket(3000, scheme), 0);
}

TEST(BucketScheme, ThreeBucketWorkedExample) {
  // z = {-2, 0, 2}: phi(0) = 0.398942, phi(2) = 0.053991. The outer deficits
  // are equal and the center deficit is zero, so the 700 points left after
  // the 3 * 100 minimum split evenly between the outer buckets.
  const BucketScheme scheme = build_bucket_scheme(three_bucket_config());
  ASSERT_EQ(scheme.size(), 3);
  EXPECT_NEAR(scheme.widths()[0], 450, 1e-6);
  EXPECT_NEAR(scheme.widths()[1], 100, 1e-6);
  EXPECT_NEAR(scheme.widths()[2], 450, 1e-6);
  EXPECT_NEAR(scheme.boundaries()[1], 450, 1e-6);
  EXPECT_NEAR(scheme.boundaries()[2], 550, 1e-6);
}

TEST(BucketScheme, ProxyPositions) {
  EXPECT_DOUBLE_EQ(bucket_proxy_position(0, 3), -2.0);
  EXPECT_DOUBLE_EQ(bucket_proxy_position(1, 3), 0.0);
  EXPECT_DOUBLE_EQ(bucket_proxy_position(2, 3), 2.0);
  EXPECT_DOUBLE_EQ(bucket_proxy_position(0, 2), -1.5);
  for (int n = 1; n <= 64; ++n) {
    for (int i = 0; i < n; ++i) {
      const double z = bucket_proxy_position(i, n);
      EXPECT_GT(z, -3.0);
      EXPECT_LT(z, 3.0);
      EXPECT_NEAR(z, 6.0 * ((i + 0.5) / n - 0.5), 1e-12);
      EXPECT_EQ(z, -bucket_proxy_position(n - 1 - i, n));
    }
  }
}

TEST(BucketScheme, TightConfigIsUniform) {
  // n * w_min == range leaves nothing to distribute.
  const BucketScheme scheme = build_bucket_scheme(make_config(0, 3000, 20, 150));
  for (double w : scheme.widths()) EXPECT_DOUBLE_EQ(w, 150.0);
}

TEST(BucketScheme, RejectsInfeasibleConfig) {
  EXPECT_THROW(build_bucket_scheme(make_config(0, 1000, 3, 400)), InfeasibleConfigError);
}

TEST(BucketScheme, RandomizedInvariants) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const RatingConfig config = testing::random_feasible_config(rng);
    const BucketScheme scheme = build_bucket_scheme(config);
    const int n = config.bucket_count;
    const auto widths = scheme.widths();
    const auto bounds = scheme.boundaries();

    ASSERT_EQ(scheme.size(), n);
    ASSERT_EQ(bounds.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(bounds.front(), config.lower_cap);
    EXPECT_EQ(bounds.back(), config.upper_cap);
    EXPECT_NEAR(std::accumulate(widths.begin(), widths.end(), 0.0), config.rank_range(),
                1e-9 * config.rank_range());
    for (int i = 0; i < n; ++i) {
      EXPECT_LT(bounds[i], bounds[i + 1]);
      EXPECT_GE(widths[i], config.min_bucket_width - 1e-9);
      EXPECT_NEAR(widths[i], widths[n - 1 - i], 1e-9);
      if (i < n / 2) EXPECT_GE(widths[i], widths[i + 1]);
    }
    if (n % 2 == 1) EXPECT_NEAR(widths[n / 2], config.min_bucket_width, 1e-9);
  }
}

TEST(RankToBucket, WorkedExamples) {
  const BucketScheme scheme = build_bucket_scheme(three_bucket_config());
  EXPECT_EQ(rank_to_bucket(0, scheme), 0);
  EXPECT_EQ(rank_to_bucket(449.999, scheme), 0);
  EXPECT_EQ(rank_to_bucket(500, scheme), 1);
  EXPECT_EQ(rank_to_bucket(1000, scheme), 2);
}

TEST(RankToBucket, BoundariesAreLeftClosed) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const BucketScheme scheme = build_bucket_scheme(testing::random_feasible_config(rng));
    for (int i = 0; i < scheme.size(); ++i) EXPECT_EQ(rank_to_bucket(scheme.lower(i), scheme), i);
    EXPECT_EQ(rank_to_bucket(scheme.boundaries().back(), scheme), scheme.size() - 1);
  }
}

TEST(RankToBucket, MonotoneSurjectiveAndMatchesLinearScan) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const RatingConfig config = testing::random_feasible_config(rng);
    const BucketScheme scheme = build_bucket_scheme(config);
    BucketIndex previous = 0;
    const int steps = 20000;
    for (int s = 0; s <= steps; ++s) {
      const double rank = config.lower_cap + config.rank_range() * s / steps;
      const BucketIndex index = rank_to_bucket(rank, scheme);
      ASSERT_GE(index, 0);
      ASSERT_LT(index, scheme.size());
      EXPECT_GE(index, previous);
      EXPECT_EQ(index, testing::linear_bucket_of(rank, scheme));
      previous = index;
    }
    for (int i = 0; i < scheme.size(); ++i) {
      EXPECT_EQ(rank_to_bucket(0.5 * (scheme.lower(i) + scheme.upper(i)), scheme), i);
    }
  }
}

TEST(LobbyToSortedIndices, SortsAndKeepsDuplicates) {
  const BucketScheme scheme = build_bucket_scheme(three_bucket_config());
  EXPECT_EQ(lobby_to_sorted_indices(testing::make_lobby("a", {0, 500, 1000}), scheme),
            (std::vector<BucketIndex>{0, 1, 2}));
  EXPECT_EQ(lobby_to_sorted_indices(testing::make_lobby("b", {1000, 0, 500}), scheme),
            (std::vector<BucketIndex>{0, 1, 2}));
  EXPECT_EQ(lobby_to_sorted_indices(testing::make_lobby("c", {500, 500}), scheme),
            (std::vector<BucketIndex>{1, 1}));
}

}  // namespace
}  // namespace cinder
