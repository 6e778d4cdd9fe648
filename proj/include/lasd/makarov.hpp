#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lasd/ecdf.hpp"

namespace lasd {

/// A continuous CDF with an effective support used to place dense u-grids.
struct AnalyticCdf {
  std::function<double(double)> cdf;
  double support_lo;
  double support_hi;
};

/// Standard normal CDF via erfc; accurate in both tails.
double normal_cdf(double z) noexcept;
AnalyticCdf normal_analytic(double mean, double sd = 1.0, double half_width_sd = 8.0);

/// u-grid (inner optimization domain) and nonnegative x-grid for the
/// partially identified criterion.
struct Grid2D {
  std::vector<double> u_points;
  std::vector<double> x_points;
};

constexpr std::size_t kDefaultXPoints = 512;
constexpr std::size_t kDefaultAnalyticUPoints = 2048;

/// u_points: sorted unique pooled observations. x_points: `x_count` uniform
/// points on [0, x_max], x_max the widest |Z_k - Z_0| over k in {A, B}.
Grid2D build_grid2d(const Sample& z0, const Sample& za, const Sample& zb, std::size_t x_count = kDefaultXPoints);

/// Jumps of P and the matching counts of Q, for u -> P(u) - Q(u + shift).
/// Entry i belongs to the i-th distinct value p_i of P:
///   p_count[i] = #{P <= p_i}, q_count[i] = #{Q <= p_i + shift}.
struct ShiftedCandidates {
  std::vector<std::uint32_t> p_count;
  std::vector<std::uint32_t> q_count;
};

ShiftedCandidates shifted_candidates(const EmpiricalCdf& p, const EmpiricalCdf& q, double shift);

/// sup_u (P(u) - Q(u + shift)), including the tails (value 0). Exact for
/// ECDFs: the supremum sits on a jump of P.
double sup_shifted_difference(const EmpiricalCdf& p, const EmpiricalCdf& q, double shift);

/// Lower Makarov bound sup_u (G_treat(u) - G_control(u - x)), floored at 0.
double makarov_lower(const EmpiricalCdf& treat, const EmpiricalCdf& control, double x);
/// Upper Makarov bound 1 + inf_u (G_treat(u) - G_control(u - x)), capped at 1.
double makarov_upper(const EmpiricalCdf& treat, const EmpiricalCdf& control, double x);

/// Dense-grid versions for analytic marginals. The u-grid spans the treatment
/// support and the control support shifted by x, padded by `pad` on each side.
double makarov_lower(const AnalyticCdf& treat, const AnalyticCdf& control, double x,
                     std::size_t u_points = kDefaultAnalyticUPoints, double pad = 0.05);
double makarov_upper(const AnalyticCdf& treat, const AnalyticCdf& control, double x,
                     std::size_t u_points = kDefaultAnalyticUPoints, double pad = 0.05);

/// Lower/upper bounds for the CDF of Z_treat - Z_control on a grid of x.
struct BoundPair {
  StepFunction lower;
  StepFunction upper;
  Label treat;
  Label control;
};

BoundPair makarov_bounds(const EmpiricalCdf& treat, Label treat_label, const EmpiricalCdf& control,
                         Label control_label, std::span<const double> x_grid);

/// The four bound terms entering T3 at each x:
///   lower_a_neg = L_A(-x), lower_a_pos = L_A(x),
///   upper_b_neg = U_B(-x), upper_b_pos = U_B(x).
struct PartialCriterion {
  std::vector<double> x_points;
  std::vector<double> lower_a_neg;
  std::vector<double> lower_a_pos;
  std::vector<double> upper_b_neg;
  std::vector<double> upper_b_pos;
  StepFunction t3;
};

PartialCriterion evaluate_partial_criterion(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb,
                                            const Grid2D& grid);

/// x -> L_A(-x) + L_A(x) - U_B(-x) - U_B(x) on grid.x_points.
StepFunction t3_process(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb, const Grid2D& grid);

PartialCriterion evaluate_partial_criterion(const AnalyticCdf& g0, const AnalyticCdf& ga, const AnalyticCdf& gb,
                                            std::span<const double> x_points,
                                            std::size_t u_points = kDefaultAnalyticUPoints);

struct StatusQuoCheck {
  bool sufficient_holds;  // U_A(-x) = 0 for all x >= 0
  bool necessary_holds;   // L_A(-x) = 0 for all x >= 0
  double max_upper_neg;
  double max_lower_neg;
};

StatusQuoCheck status_quo_bound_check(const EmpiricalCdf& g0, const EmpiricalCdf& ga, std::span<const double> x_points,
                                      double tol = 1e-12);

/// Diagnostic for the sufficient bound condition
/// L_B(-x) - U_A(-x) >= max{0, U_A(x) - L_B(x)} for all grid x >= 0.
bool sufficient_bound_condition(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb,
                                std::span<const double> x_points, double tol = 1e-12);

}  // namespace lasd
