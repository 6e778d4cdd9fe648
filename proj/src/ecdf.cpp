#include "lasd/ecdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lasd/error.hpp"

namespace lasd {

std::string_view to_string(Label label) {
  switch (label) {
    case Label::A:
      return "A";
    case Label::B:
      return "B";
    case Label::Control:
      return "Control";
  }
  return "?";
}

Sample::Sample(std::vector<double> values, Label label) : values_(std::move(values)), label_(label) {
  if (values_.empty()) {
    throw InputError("sample " + std::string(to_string(label_)) + " is empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InputError("sample " + std::string(to_string(label_)) + " has a non-finite value at position " +
                       std::to_string(i));
    }
  }
  std::sort(values_.begin(), values_.end());
}

double Sample::mean() const noexcept {
  // Sorted order makes the sum independent of input order.
  long double sum = 0.0L;
  for (double v : values_) sum += v;
  return static_cast<double>(sum / static_cast<long double>(values_.size()));
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> sorted_values) : sorted_(std::move(sorted_values)) {
  if (sorted_.empty()) throw InputError("empirical CDF requires at least one observation");
  if (!std::is_sorted(sorted_.begin(), sorted_.end())) std::sort(sorted_.begin(), sorted_.end());
}

std::size_t EmpiricalCdf::count_le(double x) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin());
}

std::size_t EmpiricalCdf::count_lt(double x) const noexcept {
  return static_cast<std::size_t>(std::lower_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin());
}

double EmpiricalCdf::evaluate(double x) const noexcept {
  return static_cast<double>(count_le(x)) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left_limit(double x) const noexcept {
  return static_cast<double>(count_lt(x)) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::point_mass(double x) const noexcept {
  return static_cast<double>(count_le(x) - count_lt(x)) / static_cast<double>(sorted_.size());
}

EmpiricalCdf build_ecdf(const Sample& sample) {
  return EmpiricalCdf(std::vector<double>(sample.values().begin(), sample.values().end()));
}

double left_limit(const EmpiricalCdf& cdf, double x) noexcept { return cdf.left_limit(x); }

double StepFunction::evaluate(double x) const noexcept {
  if (knots.empty() || x < knots.front()) return before;
  if (x > knots.back()) return after;
  const auto it = std::upper_bound(knots.begin(), knots.end(), x);
  return values[static_cast<std::size_t>(it - knots.begin()) - 1];
}

double StepFunction::max_value() const noexcept {
  if (values.empty()) return before;
  return *std::max_element(values.begin(), values.end());
}

double StepFunction::segment_length(std::size_t i) const noexcept {
  return i + 1 < knots.size() ? knots[i + 1] - knots[i] : 0.0;
}

double StepFunction::integral_positive_sq() const noexcept {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double v = std::max(0.0, values[i]);
    total += v * v * (knots[i + 1] - knots[i]);
  }
  return total;
}

double StepFunction::integral_positive_sq(std::span<const std::size_t> indices) const noexcept {
  double total = 0.0;
  for (std::size_t i : indices) {
    if (i + 1 >= knots.size()) continue;
    const double v = std::max(0.0, values[i]);
    total += v * v * (knots[i + 1] - knots[i]);
  }
  return total;
}

double default_eps() noexcept { return std::sqrt(std::numeric_limits<double>::epsilon()); }

EvaluationSet build_evaluation_set(std::span<const double> pooled, double eps) {
  if (!(eps > 0.0)) throw InputError("evaluation-set eps must be positive");
  EvaluationSet set;
  set.eps = eps;
  set.points.reserve(pooled.size() + 1);
  set.points.push_back(0.0);
  for (double x : pooled) {
    if (x > 0.0) set.points.push_back(x);
    const double shifted = x - eps * std::max(1.0, std::abs(x));
    if (shifted < 0.0) set.points.push_back(-shifted);
  }
  std::sort(set.points.begin(), set.points.end());
  set.points.erase(std::unique(set.points.begin(), set.points.end()), set.points.end());
  set.x_max = set.points.back();
  return set;
}

EvaluationSet build_evaluation_set(std::span<const Sample> samples, double eps) {
  std::vector<double> pooled;
  for (const auto& s : samples) pooled.insert(pooled.end(), s.values().begin(), s.values().end());
  return build_evaluation_set(std::span<const double>(pooled), eps);
}

std::vector<double> build_support_grid(std::span<const Sample> samples) {
  std::vector<double> grid;
  for (const auto& s : samples) grid.insert(grid.end(), s.values().begin(), s.values().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double tie_fraction(std::span<const Sample> samples) {
  std::size_t total = 0;
  for (const auto& s : samples) total += s.size();
  if (total == 0) return 0.0;
  const auto distinct = build_support_grid(samples).size();
  return 1.0 - static_cast<double>(distinct) / static_cast<double>(total);
}

}  // namespace lasd
