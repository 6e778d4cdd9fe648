#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lasd/contact.hpp"
#include "lasd/criterion.hpp"
#include "lasd/ecdf.hpp"
#include "lasd/makarov.hpp"
#include "lasd/rng.hpp"
#include "lasd/statistics.hpp"

namespace lasd {

struct BootstrapConfig {
  std::size_t reps = 0;  // 0 picks default_reps
  std::uint64_t seed = 1;
  double alpha = 0.05;
  TuningMultipliers multipliers;
  std::optional<TuningSequences> tuning;  // overrides the defaults entirely
  std::size_t x_points = kDefaultXPoints;
};

/// 499, 999 or 1999 by average sample size (about 100, 500, 1000).
std::size_t default_reps(std::span<const std::size_t> sample_sizes);

void validate(const BootstrapConfig& config);

class BootstrapDistribution {
 public:
  BootstrapDistribution(StatisticKind kind, std::vector<double> draws);

  StatisticKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return sorted_.size(); }
  std::span<const double> sorted_draws() const noexcept { return sorted_; }

  /// The ceil(q R)-th order statistic, 1-based, clamped to [1, R].
  double quantile(double q) const noexcept;
  /// (1 + #{draws >= stat}) / (R + 1)
  double p_value(double stat) const noexcept;
  double mean() const noexcept;
  double sd() const noexcept;

 private:
  StatisticKind kind_;
  std::vector<double> sorted_;
};

struct SetSummary {
  std::string name;
  std::size_t size;
  std::size_t grid_size;
  double tuning;
  bool fallback_used;
};

struct TestReport {
  StatisticValue statistic;
  double critical_value = 0.0;
  double p_value = 1.0;
  bool reject = false;
  double alpha = 0.05;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  TuningSequences tuning{};
  std::vector<std::size_t> sample_sizes;
  std::size_t n = 0;
  double mean_gap = 0.0;
  double tie_fraction = 0.0;
  std::vector<SetSummary> sets;
  std::string branch;  // KS point statistics: "first", "second" or "both"
  double boot_mean = 0.0;
  double boot_sd = 0.0;
  double boot_min = 0.0;
  double boot_max = 0.0;
  std::vector<std::string> flags;
};

/// Cumulative multinomial draw counts over a sorted sample: cum[c] is the
/// number of draws among the c smallest observations, so a resampled CDF at
/// a point with original count c equals cum[c] / n.
struct ResampleCounts {
  std::vector<std::uint32_t> counts;
  std::vector<std::uint32_t> cum;
};

void draw_resample(Rng& rng, std::size_t n, ResampleCounts& out);
/// Counts equal to the original sample: every centered process is exactly 0.
void identity_resample(std::size_t n, ResampleCounts& out);

// ---------------------------------------------------------------- point case

struct PointSetup {
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t n = 0;
  TuningSequences tuning{};
  EvaluationSet grid;
  CriterionEval crit;
  // Original counts at -x and +x for each grid point.
  std::vector<std::uint32_t> a_neg, b_neg, a_pos, b_pos;
  std::pair<SetEstimate, SetEstimate> contact;
  PointMaximizers maximizers;
};

PointSetup prepare_point(const Sample& a, const Sample& b, const TuningSequences& tuning);

/// F*_1 and F*_2 on the full grid.
void resample_point_processes(const PointSetup& setup, const ResampleCounts& a, const ResampleCounts& b,
                              std::span<double> f1, std::span<double> f2);

double resampled_v_stat(std::span<const double> f1, std::span<const double> f2, const PointMaximizers& sets);
double resampled_w_stat(std::span<const double> f1, std::span<const double> f2,
                        const std::pair<SetEstimate, SetEstimate>& contact, std::span<const double> knots);

// ----------------------------------------------------------------- FOSD case

struct FosdSetup {
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t n = 0;
  TuningSequences tuning{};
  StepFunction diff;  // G_A - G_B on the pooled support
  std::vector<std::uint32_t> a_count, b_count;
  SetEstimate contact;
  SetEstimate maximizers;
};

FosdSetup prepare_fosd(const Sample& a, const Sample& b, const TuningSequences& tuning);
void resample_fosd_process(const FosdSetup& setup, const ResampleCounts& a, const ResampleCounts& b,
                           std::span<double> g);
double resampled_fosd_ks(std::span<const double> g, const SetEstimate& maximizers);
double resampled_fosd_cvm(std::span<const double> g, const SetEstimate& contact, std::span<const double> knots);

// -------------------------------------------------------------- partial case

struct PartialSetup {
  std::size_t n_0 = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t n = 0;
  TuningSequences tuning{};
  Grid2D grid;
  PartialCriterion crit;
  SetEstimate contact;
  PartialMaximizers maximizers;
  // Positions into maximizers.inner for the outer set and the contact set.
  std::vector<std::size_t> outer_pos;
  std::vector<std::size_t> contact_pos;
};

PartialSetup prepare_partial(const Sample& z0, const Sample& za, const Sample& zb, const TuningSequences& tuning,
                             std::size_t x_points = kDefaultXPoints);

/// Resampled G*_k at a selected inner candidate.
double centered_coordinate(std::int64_t dp, double np, std::int64_t dq, double nq, double root_n) noexcept;

/// Sum over k of the inner maxima of G*_k, at every x in maximizers.x_indices.
void resample_partial_processes(const PartialSetup& setup, const ResampleCounts& z0, const ResampleCounts& za,
                                const ResampleCounts& zb, std::span<double> inner_sum);

double resampled_v3_stat(std::span<const double> inner_sum, const PartialSetup& setup);
double resampled_w3_stat(std::span<const double> inner_sum, const PartialSetup& setup);

// ------------------------------------------------------------------ drivers

/// Point-identified or FOSD statistics (two samples, labels A and B) sharing
/// one set of bootstrap draws. Deterministic for any thread count.
std::vector<TestReport> run_point_tests(const Sample& a, const Sample& b, std::span<const StatisticKind> kinds,
                                        const BootstrapConfig& config);

/// V3 / W3 for samples labelled Control, A and B.
std::vector<TestReport> run_partial_tests(const Sample& z0, const Sample& za, const Sample& zb,
                                          std::span<const StatisticKind> kinds, const BootstrapConfig& config);

/// Dispatches on the kind; samples are matched by label.
TestReport run_test(std::span<const Sample> samples, const BootstrapConfig& config, StatisticKind kind);

/// Raw bootstrap draws per kind, in rep order; the engine behind the drivers.
std::vector<std::vector<double>> point_bootstrap_draws(const PointSetup& point, const FosdSetup* fosd,
                                                       std::span<const StatisticKind> kinds, std::size_t reps,
                                                       std::uint64_t seed);
std::vector<std::vector<double>> partial_bootstrap_draws(const PartialSetup& setup,
                                                         std::span<const StatisticKind> kinds, std::size_t reps,
                                                         std::uint64_t seed);

/// Serial reference: materializes every resampled sample, rebuilds its ECDFs
/// and recomputes the criterion from scratch. Same draws, same results.
namespace reference {

std::vector<std::vector<double>> point_bootstrap_draws(const Sample& a, const Sample& b, const PointSetup& setup,
                                                       std::span<const StatisticKind> kinds, std::size_t reps,
                                                       std::uint64_t seed);
std::vector<std::vector<double>> partial_bootstrap_draws(const Sample& z0, const Sample& za, const Sample& zb,
                                                         const PartialSetup& setup,
                                                         std::span<const StatisticKind> kinds, std::size_t reps,
                                                         std::uint64_t seed);

}  // namespace reference

}  // namespace lasd
