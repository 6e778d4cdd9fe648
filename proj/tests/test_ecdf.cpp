#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lasd/criterion.hpp"
#include "lasd/ecdf.hpp"
#include "lasd/error.hpp"
#include "support.hpp"

namespace lasd {
namespace {

TEST(Ecdf, CountsAndBoundaries) {
  EmpiricalCdf f({1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(f.evaluate(2.0), 2.0 / 3.0);
  EXPECT_EQ(f.evaluate(0.5), 0.0);
  EXPECT_EQ(f.evaluate(3.0), 1.0);
  EXPECT_DOUBLE_EQ(f.left_limit(2.0), 1.0 / 3.0);
  EXPECT_EQ(f.left_limit(0.0), 0.0);
}

TEST(Ecdf, TiedAtomAtMinusTwo) {
  EmpiricalCdf f({-2.0, -2.0, 1.0, 3.0});
  EXPECT_EQ(f.evaluate(-2.0), 0.5);
  EXPECT_EQ(f.left_limit(-2.0), 0.0);
  EXPECT_EQ(f.point_mass(-2.0), 0.5);
  EXPECT_EQ(f.count_le(1.0), 3u);
  EXPECT_EQ(f.count_lt(1.0), 2u);
}

TEST(Ecdf, RandomizedProperties) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> probe(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto values = test::lattice_values(gen, 1 + trial % 17, -3, 3);
    Sample s(values, Label::A);
    const auto f = build_ecdf(s);
    std::vector<double> xs(50);
    for (auto& x : xs) x = probe(gen);
    xs.insert(xs.end(), values.begin(), values.end());
    std::sort(xs.begin(), xs.end());
    double prev = 0.0;
    for (double x : xs) {
      const double fx = f.evaluate(x);
      EXPECT_GE(fx, prev);
      EXPECT_GE(fx, 0.0);
      EXPECT_LE(fx, 1.0);
      EXPECT_EQ(fx, test::count_cdf(values, x));
      EXPECT_EQ(f.left_limit(x), test::count_left(values, x));
      EXPECT_DOUBLE_EQ(f.left_limit(x) + f.point_mass(x), fx);
      // right continuity
      EXPECT_EQ(f.evaluate(std::nextafter(x, 1e300)), test::count_cdf(values, std::nextafter(x, 1e300)));
      prev = fx;
    }
  }
}

TEST(Sample, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Sample({}, Label::A), InputError);
  EXPECT_THROW(Sample({1.0, std::nan("")}, Label::B), InputError);
  EXPECT_THROW(Sample({1.0, INFINITY}, Label::B), InputError);
  Sample s({3.0, 1.0, 2.0}, Label::Control);
  EXPECT_EQ(s.min(), 1.0);
  EXPECT_EQ(s.max(), 3.0);
  EXPECT_DOUBLE_EQ(s.mean(), 2.0);
}

TEST(EvaluationSet, NegativeObservationGetsScaledProbe) {
  const std::vector<double> pooled{-1.5, 2.0};
  const auto set = build_evaluation_set(std::span<const double>(pooled), 1e-8);
  ASSERT_EQ(set.size(), 3u);
  EXPECT_EQ(set.points[0], 0.0);
  EXPECT_DOUBLE_EQ(set.points[1], 1.5 + 1.5e-8);
  EXPECT_EQ(set.points[2], 2.0);
  EXPECT_EQ(set.x_max, 2.0);
}

TEST(EvaluationSet, AllPositive) {
  const std::vector<double> pooled{1.0, 2.0};
  const auto set = build_evaluation_set(std::span<const double>(pooled));
  EXPECT_EQ(set.points, (std::vector<double>{0.0, 1.0, 2.0}));
}

TEST(EvaluationSet, TiedNegativeAtom) {
  const std::vector<double> pooled{-2.0, -2.0, 1.0, 3.0};
  const double eps = default_eps();
  const auto set = build_evaluation_set(std::span<const double>(pooled), eps);
  ASSERT_EQ(set.size(), 4u);
  EXPECT_EQ(set.points[0], 0.0);
  EXPECT_EQ(set.points[1], 1.0);
  EXPECT_EQ(set.points[2], 2.0 + 2.0 * eps);
  EXPECT_EQ(set.points[3], 3.0);
}

TEST(EvaluationSet, RejectsNonPositiveEps) {
  const std::vector<double> pooled{1.0};
  EXPECT_THROW(build_evaluation_set(std::span<const double>(pooled), 0.0), InputError);
}

// sup of the plug-in T1 over the evaluation set against a 1e5-point uniform
// refinement, evaluated by direct counting. The lattice runs use a refinement
// that hits every integer, where isolated point values live.
double brute_sup(const std::vector<double>& va, const std::vector<double>& vb, double hi) {
  double best = -10.0;
  constexpr int kPoints = 100000;
  for (int i = 0; i <= kPoints; ++i) {
    const double x = i * hi / kPoints;
    const double gain = std::max(0.0, test::count_cdf(va, x) - test::count_cdf(vb, x));
    const double loss = test::count_cdf(va, -x) - test::count_cdf(vb, -x);
    best = std::max(best, gain + loss);
  }
  return best;
}

TEST(EvaluationSet, AttainsSupremumOnLatticeData) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto va = test::lattice_values(gen, 3 + trial % 5, -4, 4);
    auto vb = test::lattice_values(gen, 2 + trial % 7, -4, 4);
    std::vector<Sample> samples{Sample(va, Label::A), Sample(vb, Label::B)};
    const auto grid = build_evaluation_set(samples);
    const auto t1 = t1_process(build_ecdf(samples[0]), build_ecdf(samples[1]), grid);
    EXPECT_DOUBLE_EQ(t1.max_value(), brute_sup(va, vb, std::ceil(grid.x_max))) << "trial " << trial;
  }
}

TEST(EvaluationSet, AttainsSupremumOnContinuousData) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 30; ++trial) {
    auto va = test::normal_values(gen, 3 + trial % 6, 0.3);
    auto vb = test::normal_values(gen, 2 + trial % 5);
    std::vector<Sample> samples{Sample(va, Label::A), Sample(vb, Label::B)};
    const auto grid = build_evaluation_set(samples);
    const auto t1 = t1_process(build_ecdf(samples[0]), build_ecdf(samples[1]), grid);
    EXPECT_DOUBLE_EQ(t1.max_value(), brute_sup(va, vb, grid.x_max)) << "trial " << trial;
  }
}

TEST(StepFunction, EvaluateAndIntegrate) {
  StepFunction f{{0.0, 1.0, 3.0}, {0.5, -1.0, 2.0}, 7.0, -7.0};
  EXPECT_EQ(f.evaluate(-0.1), 7.0);
  EXPECT_EQ(f.evaluate(0.0), 0.5);
  EXPECT_EQ(f.evaluate(2.999), -1.0);
  EXPECT_EQ(f.evaluate(3.0), 2.0);
  EXPECT_EQ(f.evaluate(3.1), -7.0);
  EXPECT_EQ(f.max_value(), 2.0);
  EXPECT_EQ(f.segment_length(1), 2.0);
  EXPECT_EQ(f.segment_length(2), 0.0);
  EXPECT_DOUBLE_EQ(f.integral_positive_sq(), 0.25);
  const std::vector<std::size_t> idx{1, 2};
  EXPECT_EQ(f.integral_positive_sq(idx), 0.0);
}

TEST(TieFraction, CountsDuplicates) {
  std::vector<Sample> s{Sample({1.0, 1.0, 2.0}, Label::A), Sample({2.0, 3.0}, Label::B)};
  EXPECT_DOUBLE_EQ(tie_fraction(s), 1.0 - 3.0 / 5.0);
  EXPECT_EQ(build_support_grid(s), (std::vector<double>{1.0, 2.0, 3.0}));
}

}  // namespace
}  // namespace lasd
