#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "lasd/bootstrap.hpp"
#include "lasd/error.hpp"
#include "lasd/parallel.hpp"
#include "lasd/simulate.hpp"
#include "support.hpp"

namespace lasd {
namespace {

const std::vector<StatisticKind> kPointKinds{StatisticKind::V1,     StatisticKind::V2,     StatisticKind::W1,
                                             StatisticKind::W2,     StatisticKind::FosdKs, StatisticKind::FosdCvm};
const std::vector<StatisticKind> kPartialKinds{StatisticKind::V3, StatisticKind::W3};

std::pair<Sample, Sample> normal_pair(std::uint64_t seed, std::size_t na, std::size_t nb, double mu_b = 0.0) {
  std::mt19937_64 gen(seed);
  return {Sample(test::normal_values(gen, na), Label::A), Sample(test::normal_values(gen, nb, mu_b), Label::B)};
}

std::vector<double> expand(const Sample& s, const ResampleCounts& c) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.insert(out.end(), c.counts[i], s.values()[i]);
  return out;
}

TEST(Resample, IdentityGivesZeroProcesses) {
  const auto [a, b] = normal_pair(1, 40, 55);
  const auto setup = prepare_point(a, b, default_tuning(95));
  ResampleCounts ra, rb;
  identity_resample(a.size(), ra);
  identity_resample(b.size(), rb);
  std::vector<double> f1(setup.grid.size()), f2(setup.grid.size());
  resample_point_processes(setup, ra, rb, f1, f2);
  for (std::size_t i = 0; i < f1.size(); ++i) {
    EXPECT_EQ(f1[i], 0.0);
    EXPECT_EQ(f2[i], 0.0);
  }
  const auto fosd = prepare_fosd(a, b, default_tuning(95));
  std::vector<double> g(fosd.diff.size());
  resample_fosd_process(fosd, ra, rb, g);
  for (double v : g) EXPECT_EQ(v, 0.0);
}

TEST(Resample, CountsSumToN) {
  Rng rng(3);
  ResampleCounts c;
  draw_resample(rng, 17, c);
  EXPECT_EQ(c.cum.size(), 18u);
  EXPECT_EQ(c.cum.front(), 0u);
  EXPECT_EQ(c.cum.back(), 17u);
}

TEST(Resample, CenteredProcessMeanAndVariance) {
  const auto [a, b] = normal_pair(2, 200, 200);
  const auto setup = prepare_point(a, b, default_tuning(400));
  const auto it = std::lower_bound(setup.grid.points.begin(), setup.grid.points.end(), 0.5);
  const auto i = static_cast<std::size_t>(it - setup.grid.points.begin());
  const double x = setup.grid.points[i];
  const double pa = test::count_cdf(test::as_vector(a), -x);
  const double pb = test::count_cdf(test::as_vector(b), -x);
  const double expected_var = 400.0 * (pa * (1 - pa) / 200.0 + pb * (1 - pb) / 200.0);

  constexpr int kReps = 2000;
  ResampleCounts ra, rb;
  std::vector<double> f1(setup.grid.size()), f2(setup.grid.size());
  double s = 0.0, s2 = 0.0;
  for (int r = 0; r < kReps; ++r) {
    Rng rng(derive_seed(11, {static_cast<std::uint64_t>(r)}));
    draw_resample(rng, a.size(), ra);
    draw_resample(rng, b.size(), rb);
    resample_point_processes(setup, ra, rb, f1, f2);
    s += f1[i];
    s2 += f1[i] * f1[i];
  }
  const double mean = s / kReps;
  const double var = s2 / kReps - mean * mean;
  EXPECT_LT(std::abs(mean), 3.0 * std::sqrt(var / kReps));
  EXPECT_NEAR(var / expected_var, 1.0, 0.12);
}

TEST(ResampledStatistics, SupArithmetic) {
  PointMaximizers sets{};
  sets.first.indices = {0, 1};
  sets.second.indices = {1, 2};
  const std::vector<double> f1{-0.4, -0.5, 9.0};
  const std::vector<double> f2{9.0, 0.2, 0.5};
  sets.selected = Branch::First;
  EXPECT_EQ(resampled_v_stat(f1, f2, sets), 0.0);
  sets.selected = Branch::Second;
  EXPECT_EQ(resampled_v_stat(f1, f2, sets), 0.5);
  const std::vector<double> g1{0.3, 0.1, 0.0};
  sets.selected = Branch::Both;
  EXPECT_EQ(resampled_v_stat(g1, f2, sets), 0.5);
  const std::vector<double> zero(3, 0.0);
  EXPECT_EQ(resampled_v_stat(zero, zero, sets), 0.0);
}

TEST(ResampledStatistics, L2Arithmetic) {
  const std::vector<double> knots{0.0, 0.5, 1.0};
  const std::vector<double> ones(3, 1.0);
  std::pair<SetEstimate, SetEstimate> contact;
  contact.first.indices = {0, 1};
  contact.second.indices = {0, 1, 2};
  EXPECT_DOUBLE_EQ(resampled_w_stat(ones, ones, contact, knots), std::sqrt(2.0));
  contact.first.indices.clear();
  EXPECT_DOUBLE_EQ(resampled_w_stat(ones, ones, contact, knots), 1.0);
  const std::vector<double> neg(3, -1.0);
  EXPECT_EQ(resampled_w_stat(neg, neg, contact, knots), 0.0);
}

TEST(ResampledStatistics, PartialSupTakesPositivePart) {
  PartialSetup setup;
  setup.outer_pos = {0};
  const std::vector<double> sum{0.1 - 0.2 + 0.3 + 0.0};
  EXPECT_NEAR(resampled_v3_stat(sum, setup), 0.2, 1e-15);
  const std::vector<double> neg{-0.4};
  EXPECT_EQ(resampled_v3_stat(neg, setup), 0.0);
}

// With tuning wide enough to select every candidate and every x, V3* and W3*
// reduce to sums of maxima over the full candidate lists, evaluated here from
// expanded resamples by direct counting.
TEST(ResampledStatistics, PartialMatchesFullSelectionBruteForce) {
  std::mt19937_64 gen(77);
  Sample z0(test::normal_values(gen, 12), Label::Control);
  Sample za(test::normal_values(gen, 9, 0.2), Label::A);
  Sample zb(test::normal_values(gen, 11, 0.5), Label::B);
  const TuningSequences wide{10.0, 10.0, 10.0, 10.0};
  const auto setup = prepare_partial(z0, za, zb, wide, 17);
  ASSERT_EQ(setup.maximizers.outer.indices.size(), 17u);
  ASSERT_EQ(setup.contact.indices.size(), 17u);
  const double root_n = std::sqrt(32.0);
  const auto v0 = test::as_vector(z0), va = test::as_vector(za), vb = test::as_vector(zb);
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    Rng rng(derive_seed(5, {rep}));
    ResampleCounts c0, ca, cb;
    draw_resample(rng, z0.size(), c0);
    draw_resample(rng, za.size(), ca);
    draw_resample(rng, zb.size(), cb);
    std::vector<double> sum(setup.maximizers.inner.size());
    resample_partial_processes(setup, c0, ca, cb, sum);
    const auto s0 = expand(z0, c0), sa = expand(za, ca), sb = expand(zb, cb);
    const auto coord = [&](const std::vector<double>& p, const std::vector<double>& ps, const std::vector<double>& q,
                           const std::vector<double>& qs, double shift) {
      double best = 0.0;  // tail
      for (double u : p) {
        const double g = (test::count_cdf(ps, u) - test::count_cdf(p, u)) -
                         (test::count_cdf(qs, u + shift) - test::count_cdf(q, u + shift));
        best = std::max(best, root_n * g);
      }
      return best;
    };
    double vmax = 0.0, w = 0.0;
    const auto& xs = setup.crit.t3.knots;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = xs[i];
      const double s = coord(va, sa, v0, s0, x) + coord(va, sa, v0, s0, -x) + coord(v0, s0, vb, sb, -x) +
                       coord(v0, s0, vb, sb, x);
      EXPECT_NEAR(sum[i], s, 1e-12);
      vmax = std::max(vmax, s);
      if (i + 1 < xs.size()) w += std::max(0.0, s) * std::max(0.0, s) * (xs[i + 1] - x);
    }
    EXPECT_NEAR(resampled_v3_stat(sum, setup), vmax, 1e-12);
    EXPECT_NEAR(resampled_w3_stat(sum, setup), std::sqrt(w), 1e-12);
  }
}

TEST(BootstrapDistribution, QuantileAndPValueConventions) {
  std::vector<double> draws;
  for (int i = 10; i >= 1; --i) draws.push_back(i);
  BootstrapDistribution d(StatisticKind::V1, draws);
  EXPECT_EQ(d.quantile(0.95), 10.0);
  EXPECT_EQ(d.quantile(0.9), 9.0);
  EXPECT_EQ(d.quantile(0.5), 5.0);
  EXPECT_EQ(d.quantile(0.0), 1.0);
  EXPECT_DOUBLE_EQ(d.p_value(5.0), 7.0 / 11.0);
  EXPECT_DOUBLE_EQ(d.p_value(11.0), 1.0 / 11.0);
  EXPECT_DOUBLE_EQ(d.p_value(0.0), 1.0);
  EXPECT_DOUBLE_EQ(d.mean(), 5.5);
  EXPECT_THROW(BootstrapDistribution(StatisticKind::V1, {}), ConfigError);
}

TEST(BootstrapConfig, DefaultRepsAndValidation) {
  EXPECT_EQ(default_reps(std::vector<std::size_t>{100, 100}), 499u);
  EXPECT_EQ(default_reps(std::vector<std::size_t>{500, 500}), 999u);
  EXPECT_EQ(default_reps(std::vector<std::size_t>{1000, 1000, 1000}), 1999u);
  BootstrapConfig c;
  c.alpha = 1.0;
  EXPECT_THROW(validate(c), ConfigError);
  c.alpha = 0.05;
  c.tuning = TuningSequences{0.1, 0.0, 0.1, 0.1};
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Drivers, IdenticalSamplesNeverReject) {
  const auto [a, b0] = normal_pair(4, 60, 1);
  const Sample b(std::vector<double>(a.values().begin(), a.values().end()), Label::B);
  BootstrapConfig config;
  config.reps = 199;
  for (const auto& r : run_point_tests(a, b, kPointKinds, config)) {
    EXPECT_EQ(r.statistic.value, 0.0) << to_string(r.statistic.kind);
    EXPECT_FALSE(r.reject);
  }
  const Sample c(std::vector<double>(a.values().begin(), a.values().end()), Label::Control);
  for (const auto& r : run_partial_tests(c, Sample(test::as_vector(a), Label::A), b, kPartialKinds, config)) {
    EXPECT_EQ(r.statistic.value, 0.0) << to_string(r.statistic.kind);
    EXPECT_FALSE(r.reject);
  }
}

TEST(Drivers, ClearAlternativeRejects) {
  const auto [a, b] = normal_pair(5, 500, 500, 1.0);
  BootstrapConfig config;
  config.reps = 199;
  for (const auto& r : run_point_tests(a, b, kPointKinds, config)) {
    EXPECT_TRUE(r.reject) << to_string(r.statistic.kind);
    EXPECT_LT(r.p_value, 0.05);
  }
}

TEST(Drivers, ThreadCountDoesNotChangeDraws) {
  const auto [a, b] = normal_pair(6, 120, 90, 0.2);
  const auto point = prepare_point(a, b, default_tuning(210));
  const auto fosd = prepare_fosd(a, b, default_tuning(210));
  std::mt19937_64 gen(6);
  Sample z0(test::normal_values(gen, 80), Label::Control), za(test::normal_values(gen, 80), Label::A),
      zb(test::normal_values(gen, 80, 2.5), Label::B);
  const auto partial = prepare_partial(z0, za, zb, default_tuning(240), 64);
  set_threads(1);
  const auto p1 = point_bootstrap_draws(point, &fosd, kPointKinds, 101, 9);
  const auto q1 = partial_bootstrap_draws(partial, kPartialKinds, 101, 9);
  set_threads(4);
  const auto p4 = point_bootstrap_draws(point, &fosd, kPointKinds, 101, 9);
  const auto q4 = partial_bootstrap_draws(partial, kPartialKinds, 101, 9);
  set_threads(0);
  EXPECT_EQ(p1, p4);
  EXPECT_EQ(q1, q4);
}

TEST(Drivers, KernelMatchesReferenceBitForBit) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto [a, b] = normal_pair(20 + seed, 35 + seed * 10, 50, 0.3);
    const auto tuning = default_tuning(a.size() + b.size());
    const auto point = prepare_point(a, b, tuning);
    const auto fosd = prepare_fosd(a, b, tuning);
    EXPECT_EQ(point_bootstrap_draws(point, &fosd, kPointKinds, 64, seed),
              reference::point_bootstrap_draws(a, b, point, kPointKinds, 64, seed));

    std::mt19937_64 gen(seed);
    Sample z0(test::normal_values(gen, 30), Label::Control), za(test::normal_values(gen, 25), Label::A),
        zb(test::lattice_values(gen, 28, -2, 4), Label::B);
    const auto partial = prepare_partial(z0, za, zb, default_tuning(83), 48);
    EXPECT_EQ(partial_bootstrap_draws(partial, kPartialKinds, 64, seed),
              reference::partial_bootstrap_draws(z0, za, zb, partial, kPartialKinds, 64, seed));
  }
}

TEST(Drivers, SeedChangesDrawsButNotSets) {
  const auto [a, b] = normal_pair(8, 150, 150, 0.1);
  BootstrapConfig c1, c2;
  c1.reps = c2.reps = 99;
  c2.seed = 2;
  const auto r1 = run_point_tests(a, b, kPointKinds, c1);
  const auto r2 = run_point_tests(a, b, kPointKinds, c2);
  for (std::size_t j = 0; j < r1.size(); ++j) {
    EXPECT_EQ(r1[j].statistic.value, r2[j].statistic.value);
    ASSERT_EQ(r1[j].sets.size(), r2[j].sets.size());
    for (std::size_t k = 0; k < r1[j].sets.size(); ++k) EXPECT_EQ(r1[j].sets[k].size, r2[j].sets[k].size);
    EXPECT_EQ(r1[j].branch, r2[j].branch);
  }
  EXPECT_NE(r1[0].boot_mean, r2[0].boot_mean);
}

TEST(Drivers, ReportFlags) {
  std::mt19937_64 gen(3);
  Sample a(test::lattice_values(gen, 100, -3, 3), Label::A), b(test::lattice_values(gen, 100, -2, 4), Label::B);
  BootstrapConfig config;
  config.reps = 49;
  const auto r = run_point_tests(a, b, std::vector<StatisticKind>{StatisticKind::W1}, config).front();
  EXPECT_GT(r.tie_fraction, 0.1);
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "tie_fraction_above_10pct"), r.flags.end());
  EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "negative_mean_gap"), r.flags.end());
  EXPECT_EQ(r.sample_sizes, (std::vector<std::size_t>{100, 100}));
  EXPECT_EQ(r.n, 200u);
  EXPECT_EQ(r.reps, 49u);
}

TEST(Drivers, RunTestMatchesSamplesByLabel) {
  const auto [a, b] = normal_pair(9, 30, 30);
  Sample c(test::as_vector(a), Label::Control);
  BootstrapConfig config;
  config.reps = 19;
  const std::vector<Sample> two{b, a};
  EXPECT_EQ(run_test(two, config, StatisticKind::V1).statistic.value,
            run_point_tests(a, b, std::vector<StatisticKind>{StatisticKind::V1}, config).front().statistic.value);
  EXPECT_THROW(run_test(two, config, StatisticKind::V3), InputError);
  const std::vector<Sample> three{c, a, b};
  EXPECT_NO_THROW(run_test(three, config, StatisticKind::W3));
  EXPECT_THROW(run_test(three, config, StatisticKind::W1), InputError);
  const std::vector<Sample> dup{a, a};
  EXPECT_THROW(run_test(dup, config, StatisticKind::V1), InputError);
  const std::vector<Sample> tiny{Sample({1.0, 2.0}, Label::A), Sample({0.0, 3.0}, Label::B)};
  EXPECT_THROW(run_test(tiny, config, StatisticKind::V1), ConfigError);
}

}  // namespace
}  // namespace lasd
