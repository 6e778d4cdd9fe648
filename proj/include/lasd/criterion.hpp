#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lasd/ecdf.hpp"

namespace lasd {

/// Utility over gains and losses. `deriv` is optional; property checks fall
/// back to central finite differences without it.
struct ValueFunction {
  std::string name;
  std::function<double(double)> eval;
  std::optional<std::function<double(double)>> deriv;
};

ValueFunction cube_value_function();
ValueFunction signed_cbrt_value_function();
ValueFunction linear_value_function();
ValueFunction zero_value_function();
/// Piecewise-linear interpolation through (xs[i], vs[i]); flat extrapolation.
ValueFunction table_value_function(std::vector<double> xs, std::vector<double> vs);

struct ProbeOptions {
  double half_width = 10.0;
  int points = 201;
  double fd_step = 1e-5;
  double tolerance = 1e-9;
};

/// Checks sign, monotonicity and loss aversion on a symmetric probe grid.
/// Throws PropertyViolation naming the first failed property. The check is
/// necessarily partial: it only sees the probe points.
void check_value_function(const ValueFunction& v, const ProbeOptions& probe = {});

struct Atom {
  double location;
  double mass;
};

class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<Atom> atoms);
  static DiscreteDistribution from_sample(const Sample& sample);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  double cdf(double x) const noexcept;

 private:
  std::vector<Atom> atoms_;  // sorted by location
};

/// W(F) = sum over atoms of v(location) * mass.
double evaluate_svf(const DiscreteDistribution& dist, const ValueFunction& v, bool check_properties = true);

/// Plug-in criterion processes on an evaluation set.
struct CriterionEval {
  EvaluationSet grid;
  StepFunction t1;
  StepFunction m1;
  StepFunction m2;
};

/// Throws InputError if `grid` lacks a point required by the samples behind
/// fa and fb.
void validate_evaluation_set(const EmpiricalCdf& fa, const EmpiricalCdf& fb, const EvaluationSet& grid);

/// x -> (fa(x) - fb(x))^+ + fa(-x) - fb(-x) on the grid; zero beyond x_max.
StepFunction t1_process(const EmpiricalCdf& fa, const EmpiricalCdf& fb, const EvaluationSet& grid);

/// (m1, m2) with m1(x) = fa(-x) - fb(-x) and m2(x) = m1(x) + fa(x) - fb(x).
std::pair<StepFunction, StepFunction> t2_process(const EmpiricalCdf& fa, const EmpiricalCdf& fb,
                                                 const EvaluationSet& grid);

CriterionEval evaluate_criterion(const EmpiricalCdf& fa, const EmpiricalCdf& fb, const EvaluationSet& grid);

struct LasdCheck {
  bool dominates = true;
  std::vector<double> violated_at;
};

using CdfFunction = std::function<double(double)>;

/// T1 <= tol at every grid point x >= 0.
LasdCheck check_lasd_exact(const CdfFunction& fa, const CdfFunction& fb, std::span<const double> grid,
                           double tol = 1e-12);
/// Exact check for discrete pairs; the grid is built from the atom locations.
LasdCheck check_lasd_exact(const DiscreteDistribution& fa, const DiscreteDistribution& fb, double tol = 1e-12);

/// mean(A) - mean(B); negative values are evidence against A dominating B.
double mean_gap(const Sample& a, const Sample& b);

/// x -> ga(x) - gb(x) on a grid of levels.
StepFunction fosd_process(const EmpiricalCdf& ga, const EmpiricalCdf& gb, std::span<const double> grid);

}  // namespace lasd
