#include "lasd/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lasd/error.hpp"

namespace lasd {

ValueFunction cube_value_function() {
  return {"cube", [](double x) { return x * x * x; }, [](double x) { return 3.0 * x * x; }};
}

ValueFunction signed_cbrt_value_function() {
  // Derivative is unbounded at 0; leave it to finite differences.
  return {"signed_cbrt", [](double x) { return std::cbrt(x); }, std::nullopt};
}

ValueFunction linear_value_function() {
  return {"linear", [](double x) { return x; }, [](double) { return 1.0; }};
}

ValueFunction zero_value_function() {
  return {"zero", [](double) { return 0.0; }, [](double) { return 0.0; }};
}

ValueFunction table_value_function(std::vector<double> xs, std::vector<double> vs) {
  if (xs.size() != vs.size() || xs.size() < 2) {
    throw InputError("value table needs at least two (x, v) rows of equal length");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw InputError("value table x column must be strictly increasing");
  }
  auto eval = [xs, vs](double x) {
    if (x <= xs.front()) return vs.front();
    if (x >= xs.back()) return vs.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto hi = static_cast<std::size_t>(it - xs.begin());
    const auto lo = hi - 1;
    const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return vs[lo] + w * (vs[hi] - vs[lo]);
  };
  return {"table", std::move(eval), std::nullopt};
}

namespace {

double derivative_at(const ValueFunction& v, double x, double h) {
  if (v.deriv) return (*v.deriv)(x);
  return (v.eval(x + h) - v.eval(x - h)) / (2.0 * h);
}

}  // namespace

void check_value_function(const ValueFunction& v, const ProbeOptions& probe) {
  if (!v.eval) throw PropertyViolation("definition", "value function has no evaluator");
  const int m = probe.points;
  std::vector<double> grid(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    grid[static_cast<std::size_t>(i)] = -probe.half_width + 2.0 * probe.half_width * i / (m - 1);
  }
  const double tol = probe.tolerance;

  const double at_zero = v.eval(0.0);
  if (std::abs(at_zero) > tol) {
    throw PropertyViolation("sign", "v(0) = " + std::to_string(at_zero) + " is not 0");
  }
  for (double x : grid) {
    const double vx = v.eval(x);
    if ((x < 0.0 && vx > tol) || (x > 0.0 && vx < -tol)) {
      throw PropertyViolation("sign", "v(" + std::to_string(x) + ") = " + std::to_string(vx));
    }
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double lo = v.eval(grid[i - 1]);
    const double hi = v.eval(grid[i]);
    if (hi < lo - tol * std::max(1.0, std::abs(lo))) {
      throw PropertyViolation("nondecreasing", "v decreases between " + std::to_string(grid[i - 1]) + " and " +
                                                   std::to_string(grid[i]));
    }
  }
  for (double x : grid) {
    if (x <= 0.0) continue;
    const double gain = derivative_at(v, x, probe.fd_step);
    const double loss = derivative_at(v, -x, probe.fd_step);
    // Relative slack absorbs finite-difference rounding for symmetric slopes.
    const double slack = 1e-6 * std::max(1.0, std::abs(gain));
    if (loss < gain - slack) {
      throw PropertyViolation("loss_averse", "v'(-" + std::to_string(x) + ") = " + std::to_string(loss) +
                                                 " < v'(" + std::to_string(x) + ") = " + std::to_string(gain));
    }
  }
}

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InputError("discrete distribution needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.location < b.location; });
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i].location)) throw InputError("atom location must be finite");
    if (!(atoms_[i].mass > 0.0)) throw InputError("atom masses must be positive");
    if (i > 0 && atoms_[i].location == atoms_[i - 1].location) throw InputError("atom locations must be distinct");
    total += atoms_[i].mass;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InputError("atom masses sum to " + std::to_string(total) + ", not 1");
}

DiscreteDistribution DiscreteDistribution::from_sample(const Sample& sample) {
  std::vector<Atom> atoms;
  const auto values = sample.values();
  const double n = static_cast<double>(values.size());
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    atoms.push_back({values[i], static_cast<double>(j - i) / n});
    i = j;
  }
  // Renormalize rounding so the mass invariant holds for any n.
  double total = 0.0;
  for (const auto& a : atoms) total += a.mass;
  for (auto& a : atoms) a.mass /= total;
  return DiscreteDistribution(std::move(atoms));
}

double DiscreteDistribution::cdf(double x) const noexcept {
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (a.location > x) break;
    total += a.mass;
  }
  return std::min(total, 1.0);
}

double evaluate_svf(const DiscreteDistribution& dist, const ValueFunction& v, bool check_properties) {
  if (check_properties) check_value_function(v);
  double total = 0.0;
  for (const auto& a : dist.atoms()) total += v.eval(a.location) * a.mass;
  return total;
}

void validate_evaluation_set(const EmpiricalCdf& fa, const EmpiricalCdf& fb, const EvaluationSet& grid) {
  if (grid.points.empty() || grid.points.front() != 0.0) {
    throw InputError("evaluation set must start at 0");
  }
  const auto contains = [&](double p) {
    return std::binary_search(grid.points.begin(), grid.points.end(), p);
  };
  for (const auto* cdf : {&fa, &fb}) {
    for (double x : cdf->sorted_values()) {
      if (x > 0.0 && !contains(x)) {
        throw InputError("evaluation set is missing observation " + std::to_string(x));
      }
      const double shifted = x - grid.eps * std::max(1.0, std::abs(x));
      if (shifted < 0.0 && !contains(-shifted)) {
        throw InputError("evaluation set is missing the left-limit probe for " + std::to_string(x));
      }
    }
  }
}

namespace {

StepFunction on_grid(const EvaluationSet& grid) {
  StepFunction f;
  f.knots = grid.points;
  f.values.assign(grid.points.size(), 0.0);
  f.before = 0.0;
  f.after = 0.0;
  return f;
}

}  // namespace

CriterionEval evaluate_criterion(const EmpiricalCdf& fa, const EmpiricalCdf& fb, const EvaluationSet& grid) {
  validate_evaluation_set(fa, fb, grid);
  CriterionEval out{grid, on_grid(grid), on_grid(grid), on_grid(grid)};
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const double x = grid.points[i];
    const double losses = fa.evaluate(-x) - fb.evaluate(-x);
    const double gains = fa.evaluate(x) - fb.evaluate(x);
    out.m1.values[i] = losses;
    out.m2.values[i] = losses + gains;
    out.t1.values[i] = std::max(0.0, gains) + losses;
  }
  return out;
}

StepFunction t1_process(const EmpiricalCdf& fa, const EmpiricalCdf& fb, const EvaluationSet& grid) {
  return evaluate_criterion(fa, fb, grid).t1;
}

std::pair<StepFunction, StepFunction> t2_process(const EmpiricalCdf& fa, const EmpiricalCdf& fb,
                                                 const EvaluationSet& grid) {
  auto eval = evaluate_criterion(fa, fb, grid);
  return {std::move(eval.m1), std::move(eval.m2)};
}

LasdCheck check_lasd_exact(const CdfFunction& fa, const CdfFunction& fb, std::span<const double> grid,
                           double tol) {
  LasdCheck out;
  for (double x : grid) {
    if (x < 0.0) continue;
    const double t1 = std::max(0.0, fa(x) - fb(x)) + fa(-x) - fb(-x);
    if (t1 > tol) {
      out.dominates = false;
      out.violated_at.push_back(x);
    }
  }
  return out;
}

LasdCheck check_lasd_exact(const DiscreteDistribution& fa, const DiscreteDistribution& fb, double tol) {
  std::vector<double> locations;
  for (const auto* d : {&fa, &fb}) {
    for (const auto& a : d->atoms()) locations.push_back(a.location);
  }
  const auto grid = build_evaluation_set(std::span<const double>(locations));
  return check_lasd_exact([&](double x) { return fa.cdf(x); }, [&](double x) { return fb.cdf(x); }, grid.points,
                          tol);
}

double mean_gap(const Sample& a, const Sample& b) { return a.mean() - b.mean(); }

StepFunction fosd_process(const EmpiricalCdf& ga, const EmpiricalCdf& gb, std::span<const double> grid) {
  if (grid.empty()) throw InputError("FOSD grid is empty");
  StepFunction f;
  f.knots.assign(grid.begin(), grid.end());
  f.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) f.values[i] = ga.evaluate(grid[i]) - gb.evaluate(grid[i]);
  return f;
}

}  // namespace lasd
