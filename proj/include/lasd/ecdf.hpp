#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace lasd {

enum class Label { A, B, Control };

std::string_view to_string(Label label);

/// A finite, nonempty set of observations, stored sorted ascending.
class Sample {
 public:
  Sample(std::vector<double> values, Label label);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Label label() const noexcept { return label_; }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }
  double mean() const noexcept;

 private:
  std::vector<double> values_;
  Label label_;
};

/// Right-continuous empirical distribution function. Values are exact
/// ratios count/n.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> sorted_values);

  double evaluate(double x) const noexcept;
  double left_limit(double x) const noexcept;
  double point_mass(double x) const noexcept;

  /// #{values <= x}
  std::size_t count_le(double x) const noexcept;
  /// #{values < x}
  std::size_t count_lt(double x) const noexcept;

  std::span<const double> sorted_values() const noexcept { return sorted_; }
  std::size_t n() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

EmpiricalCdf build_ecdf(const Sample& sample);
double left_limit(const EmpiricalCdf& cdf, double x) noexcept;

/// Piecewise-constant right-continuous function. `values[i]` holds on
/// [knots[i], knots[i+1]); the last knot carries a point value and closes the
/// integration domain. `before` / `after` hold outside [knots.front(),
/// knots.back()].
struct StepFunction {
  std::vector<double> knots;
  std::vector<double> values;
  double before = 0.0;
  double after = 0.0;

  std::size_t size() const noexcept { return knots.size(); }
  double evaluate(double x) const noexcept;
  double max_value() const noexcept;
  /// Length of the segment that starts at knot i (zero for the last knot).
  double segment_length(std::size_t i) const noexcept;

  /// Exact integral of (f^+)^2 over [knots.front(), knots.back()].
  double integral_positive_sq() const noexcept;
  /// Same, restricted to the segments starting at the given knot indices.
  double integral_positive_sq(std::span<const std::size_t> indices) const noexcept;
};

/// Points at which the point-identified criterion processes are evaluated:
/// 0, every positive pooled observation, and -(x - eps) for every pooled
/// observation with x - eps < 0.
struct EvaluationSet {
  std::vector<double> points;
  double x_max = 0.0;
  double eps = 0.0;

  std::size_t size() const noexcept { return points.size(); }
};

/// sqrt of double machine epsilon.
double default_eps() noexcept;

/// `eps` is scaled by max(1, |x|) for each observation x.
EvaluationSet build_evaluation_set(std::span<const Sample> samples, double eps = default_eps());
EvaluationSet build_evaluation_set(std::span<const double> pooled, double eps = default_eps());

/// Sorted unique pooled observations; the grid for processes on levels.
std::vector<double> build_support_grid(std::span<const Sample> samples);

/// 1 - (#distinct values / #observations) over the pooled samples.
double tie_fraction(std::span<const Sample> samples);

}  // namespace lasd
