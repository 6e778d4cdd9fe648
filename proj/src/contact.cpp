#include "lasd/contact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lasd/error.hpp"
#include "lasd/makarov.hpp"

namespace lasd {

TuningSequences default_tuning(std::size_t n) { return default_tuning(n, TuningMultipliers{}); }

TuningSequences default_tuning(std::size_t n, const TuningMultipliers& mult) {
  if (n < 8) {
    throw ConfigError("default tuning needs n >= 8 so that log(log(n)) is usefully positive; got n = " +
                      std::to_string(n));
  }
  for (double m : {mult.a, mult.b, mult.c, mult.d}) {
    if (!(m > 0.0) || !std::isfinite(m)) throw ConfigError("tuning multipliers must be positive and finite");
  }
  const double dn = static_cast<double>(n);
  const double ll = std::log(std::log(dn));
  const double b = std::sqrt(ll / dn);
  return {mult.a * 4.0 * ll / std::sqrt(dn), mult.b * b, mult.c * b, mult.d * b};
}

SetEstimate contact_set(const StepFunction& f, double a) {
  SetEstimate s;
  s.kind = SetKind::Contact;
  s.tuning = a;
  s.grid_size = f.values.size();
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (std::abs(f.values[i]) <= a) s.indices.push_back(i);
  }
  return s;
}

SetEstimate eps_maximizer_set(const StepFunction& f, double b) {
  SetEstimate s;
  s.kind = SetKind::EpsMax;
  s.tuning = b;
  s.grid_size = f.values.size();
  if (f.values.empty()) return s;
  const double threshold = f.max_value() - b;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] >= threshold) s.indices.push_back(i);
  }
  return s;
}

void apply_full_fallback(SetEstimate& set) {
  if (!set.indices.empty()) return;
  set.indices.resize(set.grid_size);
  std::iota(set.indices.begin(), set.indices.end(), std::size_t{0});
  set.fallback_used = true;
}

std::pair<SetEstimate, SetEstimate> contact_sets_point(const StepFunction& m1, const StepFunction& m2, double a_n) {
  auto first = contact_set(m1, a_n);
  auto second = contact_set(m2, a_n);
  if (first.empty() && second.empty()) {
    apply_full_fallback(first);
    apply_full_fallback(second);
  }
  return {std::move(first), std::move(second)};
}

PointMaximizers eps_maximizer_sets_point(const StepFunction& m1, const StepFunction& m2, double b_n, double c_n) {
  PointMaximizers out{eps_maximizer_set(m1, b_n), eps_maximizer_set(m2, b_n), Branch::Both, m1.max_value(),
                      m2.max_value()};
  if (std::abs(out.max_first - out.max_second) > c_n) {
    out.selected = out.max_first > out.max_second ? Branch::First : Branch::Second;
  }
  return out;
}

SetEstimate contact_set_partial(const StepFunction& t3, double a_n) {
  auto s = contact_set(t3, a_n);
  apply_full_fallback(s);
  return s;
}

InnerSet inner_eps_maximizers(const EmpiricalCdf& p, const EmpiricalCdf& q, double shift, double b_n) {
  const auto c = shifted_candidates(p, q, shift);
  const double np = static_cast<double>(p.n());
  const double nq = static_cast<double>(q.n());
  std::vector<double> values(c.p_count.size());
  double best = 0.0;  // tail
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<double>(c.p_count[i]) / np - static_cast<double>(c.q_count[i]) / nq;
    best = std::max(best, values[i]);
  }
  InnerSet out;
  out.max_value = best;
  out.candidates = values.size() + 1;
  const double threshold = best - b_n;
  out.tail_selected = 0.0 >= threshold;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= threshold) out.selected.push_back({c.p_count[i], c.q_count[i]});
  }
  return out;
}

PartialMaximizers eps_maximizer_sets_partial(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb,
                                             const StepFunction& t3, std::span<const std::size_t> x_indices,
                                             double b_n, double d_n) {
  PartialMaximizers out;
  out.outer = eps_maximizer_set(t3, d_n);
  out.x_indices.assign(x_indices.begin(), x_indices.end());
  out.inner.resize(x_indices.size());
  const auto pick = [&](Label l) -> const EmpiricalCdf& {
    return l == Label::A ? ga : (l == Label::B ? gb : g0);
  };
  for (std::size_t j = 0; j < x_indices.size(); ++j) {
    const double x = t3.knots[x_indices[j]];
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& spec = kPartialCoordinates[k];
      out.inner[j][k] = inner_eps_maximizers(pick(spec.p), pick(spec.q), spec.shift_sign * x, b_n);
    }
  }
  return out;
}

}  // namespace lasd
