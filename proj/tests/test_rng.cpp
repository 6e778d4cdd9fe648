#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "lasd/makarov.hpp"
#include "lasd/rng.hpp"

namespace lasd {
namespace {

TEST(Rng, SplitMixReferenceValue) { EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL); }

TEST(Rng, NormalQuantileReferenceValues) {
  // scipy.stats.norm.ppf
  EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-14);
  EXPECT_NEAR(normal_quantile(1e-10), -6.361340902404056, 1e-13);
  EXPECT_NEAR(normal_quantile(0.3), -0.5244005127080409, 1e-15);
  EXPECT_EQ(normal_quantile(0.5), 0.0);
  EXPECT_TRUE(std::isinf(normal_quantile(0.0)));
  EXPECT_TRUE(std::isinf(normal_quantile(1.0)));
}

TEST(Rng, NormalQuantileInvertsCdf) {
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    EXPECT_NEAR(normal_cdf(normal_quantile(p)), p, 1e-14);
  }
}

TEST(Rng, SameSeedSameStream) {
  Rng a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, DerivedSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t r = 0; r < 1000; ++r) seen.insert(derive_seed(7, {r}));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(7, {1, 0}), derive_seed(7, {0, 1}));
  EXPECT_EQ(derive_seed(7, {3, 4}), derive_seed(7, {3, 4}));
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(rng.below(1), 0u);
}

TEST(Rng, UniformAndNormalMoments) {
  Rng rng(9);
  double su = 0.0, sn = 0.0, sn2 = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform_open();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  EXPECT_NEAR(su / kDraws, 0.5, 0.005);
  EXPECT_NEAR(sn / kDraws, 0.0, 0.01);
  EXPECT_NEAR(sn2 / kDraws, 1.0, 0.01);
}

}  // namespace
}  // namespace lasd
