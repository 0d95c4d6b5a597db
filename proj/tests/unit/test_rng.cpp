#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "cascadelab/rng.hpp"

using namespace cascadelab;

TEST(Rng, PublishedVectors) {
  // Reference outputs of SplitMix64 seeded with 0, and FNV-1a test vectors.
  static_assert(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  static_assert(fnv1a64("") == 0xCBF29CE484222325ULL);
  static_assert(fnv1a64("a") == 0xAF63DC4C8601EC8CULL);
  SUCCEED();
}

TEST(Rng, TrialSeedDeterministic) {
  EXPECT_EQ(derive_trial_seed(1, "fig2", "er", 1000, 7), derive_trial_seed(1, "fig2", "er", 1000, 7));
}

TEST(Rng, TrialSeedSensitiveToEveryInput) {
  const auto base = derive_trial_seed(1, "fig2", "er", 1000, 0);
  EXPECT_NE(base, derive_trial_seed(1, "fig2", "er", 1000, 1));
  EXPECT_NE(base, derive_trial_seed(2, "fig2", "er", 1000, 0));
  EXPECT_NE(base, derive_trial_seed(1, "fig3", "er", 1000, 0));
  EXPECT_NE(base, derive_trial_seed(1, "fig2", "pa", 1000, 0));
  EXPECT_NE(base, derive_trial_seed(1, "fig2", "er", 1001, 0));
}

TEST(Rng, NoCollisionsOverMillionSeeds) {
  std::vector<std::uint64_t> seeds;
  seeds.reserve(1'000'000);
  const char* models[] = {"er", "pa", "security"};
  for (std::uint64_t t = 0; t < 1'000'000; ++t) {
    seeds.push_back(derive_trial_seed(t % 7, "fig1", models[t % 3], 100 + t % 11, t));
  }
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
}

TEST(Rng, BelowStaysInRangeAndIsRoughlyUniform) {
  Rng rng(123);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) {
    const auto x = rng.below(6);
    ASSERT_LT(x, 6u);
    ++counts[x];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(Rng, UnitInHalfOpenInterval) {
  Rng rng(5);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(Rng, SameSeedSameStream) {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(derive_stream_seed(1, 0), derive_stream_seed(1, 1));
}
