#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lasd/bootstrap.hpp"
#include "lasd/ecdf.hpp"
#include "lasd/rng.hpp"
#include "lasd/statistics.hpp"

namespace lasd {

enum class Family { NormalPoint, TriangularPoint, NormalPartial };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

/// One Monte Carlo design.
///   normal_point:     parameter h, mu_B = h / sqrt(n) with n = 2 n_per_sample
///   triangular_point: parameter eps (absolute), B's corners move by eps / sqrt(n)
///   normal_partial:   parameter mu_B (absolute)
struct ScenarioSpec {
  Family family = Family::NormalPoint;
  std::vector<double> parameters;
  std::size_t n_per_sample = 100;
  std::size_t reps_mc = 1000;
  BootstrapConfig bootstrap;
  std::vector<StatisticKind> kinds;
};

void validate(const ScenarioSpec& spec);

std::pair<Sample, Sample> gen_normal_point(double mu_b, std::size_t n, Rng& rng);

double triangular_quantile(double p, double lower, double mode, double upper);
double triangular_cdf(double x, double lower, double mode, double upper);
/// A ~ triangular(-1, 0, 1); B ~ triangular(-1 - e, -e, 1 + e), e = eps / sqrt(2n).
std::pair<Sample, Sample> gen_triangular(double eps, std::size_t n, Rng& rng);

/// (Z_0, Z_A, Z_B) ~ N(0, 1), N(0, 1), N(mu_b, 1).
std::array<Sample, 3> gen_normal_partial(double mu_b, std::size_t n, Rng& rng);

struct RejectionRow {
  Family family;
  double parameter;
  StatisticKind kind;
  std::size_t n;  // per sample
  double rate;
  double mc_se;
  std::size_t reps_mc;
  std::size_t reps_bootstrap;
  std::uint64_t seed;
};

struct RejectionTable {
  std::vector<RejectionRow> rows;

  /// Columns: family,parameter,n,kind,rate,mc_se,reps_mc,R,seed
  std::string to_csv() const;
};

/// Deterministic for a given spec, whatever the thread count.
RejectionTable run_scenario(const ScenarioSpec& spec);

}  // namespace lasd
