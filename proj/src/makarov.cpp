#include "lasd/makarov.hpp"

#include <algorithm>
#include <cmath>

#include "lasd/error.hpp"

namespace lasd {

double normal_cdf(double z) noexcept { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

AnalyticCdf normal_analytic(double mean, double sd, double half_width_sd) {
  if (!(sd > 0.0)) throw InputError("normal sd must be positive");
  return {[mean, sd](double x) { return normal_cdf((x - mean) / sd); }, mean - half_width_sd * sd,
          mean + half_width_sd * sd};
}

Grid2D build_grid2d(const Sample& z0, const Sample& za, const Sample& zb, std::size_t x_count) {
  if (x_count < 2) throw ConfigError("x-grid needs at least 2 points");
  Grid2D grid;
  const std::array<const Sample*, 3> all{&z0, &za, &zb};
  for (const auto* s : all) grid.u_points.insert(grid.u_points.end(), s->values().begin(), s->values().end());
  std::sort(grid.u_points.begin(), grid.u_points.end());
  grid.u_points.erase(std::unique(grid.u_points.begin(), grid.u_points.end()), grid.u_points.end());

  double x_max = 0.0;
  for (const auto* s : {&za, &zb}) {
    x_max = std::max(x_max, std::abs(s->max() - z0.min()));
    x_max = std::max(x_max, std::abs(s->min() - z0.max()));
  }
  if (x_max <= 0.0) {
    grid.x_points = {0.0};
    return grid;
  }
  grid.x_points.resize(x_count);
  for (std::size_t i = 0; i < x_count; ++i) {
    grid.x_points[i] = x_max * static_cast<double>(i) / static_cast<double>(x_count - 1);
  }
  grid.x_points.back() = x_max;
  return grid;
}

ShiftedCandidates shifted_candidates(const EmpiricalCdf& p, const EmpiricalCdf& q, double shift) {
  const auto pv = p.sorted_values();
  const auto qv = q.sorted_values();
  ShiftedCandidates out;
  out.p_count.reserve(pv.size());
  out.q_count.reserve(pv.size());
  std::size_t j = 0;
  std::size_t i = 0;
  while (i < pv.size()) {
    std::size_t next = i + 1;
    while (next < pv.size() && pv[next] == pv[i]) ++next;
    // p_i + shift is nondecreasing in i, so the Q pointer only moves forward.
    const double at = pv[i] + shift;
    while (j < qv.size() && qv[j] <= at) ++j;
    out.p_count.push_back(static_cast<std::uint32_t>(next));
    out.q_count.push_back(static_cast<std::uint32_t>(j));
    i = next;
  }
  return out;
}

double sup_shifted_difference(const EmpiricalCdf& p, const EmpiricalCdf& q, double shift) {
  const auto c = shifted_candidates(p, q, shift);
  const double np = static_cast<double>(p.n());
  const double nq = static_cast<double>(q.n());
  double best = 0.0;
  for (std::size_t i = 0; i < c.p_count.size(); ++i) {
    best = std::max(best, static_cast<double>(c.p_count[i]) / np - static_cast<double>(c.q_count[i]) / nq);
  }
  return best;
}

namespace {

double clamp01(double v) noexcept { return std::clamp(v, 0.0, 1.0); }

// Extremes of u -> treat(u) - control(u - x) over a uniform u-grid.
std::pair<double, double> analytic_extremes(const AnalyticCdf& treat, const AnalyticCdf& control, double x,
                                            std::size_t u_points, double pad) {
  if (u_points < 2) throw ConfigError("analytic u-grid needs at least 2 points");
  double lo = std::min(treat.support_lo, control.support_lo + x);
  double hi = std::max(treat.support_hi, control.support_hi + x);
  const double width = hi - lo;
  lo -= pad * width;
  hi += pad * width;
  double best = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < u_points; ++i) {
    const double u = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(u_points - 1);
    const double d = treat.cdf(u) - control.cdf(u - x);
    best = std::max(best, d);
    worst = std::min(worst, d);
  }
  return {best, worst};
}

}  // namespace

double makarov_lower(const EmpiricalCdf& treat, const EmpiricalCdf& control, double x) {
  return clamp01(sup_shifted_difference(treat, control, -x));
}

double makarov_upper(const EmpiricalCdf& treat, const EmpiricalCdf& control, double x) {
  return clamp01(1.0 - sup_shifted_difference(control, treat, x));
}

double makarov_lower(const AnalyticCdf& treat, const AnalyticCdf& control, double x, std::size_t u_points,
                     double pad) {
  return clamp01(analytic_extremes(treat, control, x, u_points, pad).first);
}

double makarov_upper(const AnalyticCdf& treat, const AnalyticCdf& control, double x, std::size_t u_points,
                     double pad) {
  return clamp01(1.0 + analytic_extremes(treat, control, x, u_points, pad).second);
}

BoundPair makarov_bounds(const EmpiricalCdf& treat, Label treat_label, const EmpiricalCdf& control,
                         Label control_label, std::span<const double> x_grid) {
  if (!std::is_sorted(x_grid.begin(), x_grid.end())) throw InputError("bound grid must be ascending");
  BoundPair out;
  out.treat = treat_label;
  out.control = control_label;
  out.lower.knots.assign(x_grid.begin(), x_grid.end());
  out.upper.knots = out.lower.knots;
  out.lower.after = out.upper.after = 1.0;
  out.lower.values.resize(x_grid.size());
  out.upper.values.resize(x_grid.size());
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    out.lower.values[i] = makarov_lower(treat, control, x_grid[i]);
    out.upper.values[i] = makarov_upper(treat, control, x_grid[i]);
  }
  return out;
}

namespace {

PartialCriterion empty_partial(std::span<const double> x_points) {
  PartialCriterion out;
  out.x_points.assign(x_points.begin(), x_points.end());
  const auto m = x_points.size();
  out.lower_a_neg.resize(m);
  out.lower_a_pos.resize(m);
  out.upper_b_neg.resize(m);
  out.upper_b_pos.resize(m);
  out.t3.knots = out.x_points;
  out.t3.values.resize(m);
  return out;
}

void finish_t3(PartialCriterion& out) {
  for (std::size_t i = 0; i < out.x_points.size(); ++i) {
    out.t3.values[i] = out.lower_a_neg[i] + out.lower_a_pos[i] - out.upper_b_neg[i] - out.upper_b_pos[i];
  }
}

}  // namespace

PartialCriterion evaluate_partial_criterion(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb,
                                            const Grid2D& grid) {
  auto out = empty_partial(grid.x_points);
  for (std::size_t i = 0; i < grid.x_points.size(); ++i) {
    const double x = grid.x_points[i];
    out.lower_a_neg[i] = makarov_lower(ga, g0, -x);
    out.lower_a_pos[i] = makarov_lower(ga, g0, x);
    out.upper_b_neg[i] = makarov_upper(gb, g0, -x);
    out.upper_b_pos[i] = makarov_upper(gb, g0, x);
  }
  finish_t3(out);
  return out;
}

StepFunction t3_process(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb, const Grid2D& grid) {
  return evaluate_partial_criterion(g0, ga, gb, grid).t3;
}

PartialCriterion evaluate_partial_criterion(const AnalyticCdf& g0, const AnalyticCdf& ga, const AnalyticCdf& gb,
                                            std::span<const double> x_points, std::size_t u_points) {
  auto out = empty_partial(x_points);
  for (std::size_t i = 0; i < x_points.size(); ++i) {
    const double x = x_points[i];
    out.lower_a_neg[i] = makarov_lower(ga, g0, -x, u_points);
    out.lower_a_pos[i] = makarov_lower(ga, g0, x, u_points);
    out.upper_b_neg[i] = makarov_upper(gb, g0, -x, u_points);
    out.upper_b_pos[i] = makarov_upper(gb, g0, x, u_points);
  }
  finish_t3(out);
  return out;
}

StatusQuoCheck status_quo_bound_check(const EmpiricalCdf& g0, const EmpiricalCdf& ga, std::span<const double> x_points,
                                      double tol) {
  StatusQuoCheck out{true, true, 0.0, 0.0};
  for (double x : x_points) {
    if (x < 0.0) continue;
    out.max_upper_neg = std::max(out.max_upper_neg, makarov_upper(ga, g0, -x));
    out.max_lower_neg = std::max(out.max_lower_neg, makarov_lower(ga, g0, -x));
  }
  out.sufficient_holds = out.max_upper_neg <= tol;
  out.necessary_holds = out.max_lower_neg <= tol;
  return out;
}

bool sufficient_bound_condition(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb,
                                std::span<const double> x_points, double tol) {
  for (double x : x_points) {
    if (x < 0.0) continue;
    const double lhs = makarov_lower(gb, g0, -x) - makarov_upper(ga, g0, -x);
    const double rhs = std::max(0.0, makarov_upper(ga, g0, x) - makarov_lower(gb, g0, x));
    if (lhs < rhs - tol) return false;
  }
  return true;
}

}  // namespace lasd
