#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lasd/ecdf.hpp"

namespace lasd {

/// Tuning constants in probability units.
struct TuningSequences {
  double a_n;  // contact-set width
  double b_n;  // eps-maximizer width
  double c_n;  // branch separation for the resampled KS statistic
  double d_n;  // outer eps-maximizer width, partial case
};

struct TuningMultipliers {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double d = 1.0;
};

/// a_n = 4 log(log n) / sqrt(n); b_n = c_n = d_n = sqrt(log(log n) / n).
/// Throws ConfigError for n < 8, where log log n is too small to be useful.
TuningSequences default_tuning(std::size_t n);
TuningSequences default_tuning(std::size_t n, const TuningMultipliers& mult);

enum class SetKind { Contact, EpsMax };

/// Index set into the grid of the process it was estimated from.
struct SetEstimate {
  std::vector<std::size_t> indices;
  SetKind kind = SetKind::Contact;
  double tuning = 0.0;
  bool fallback_used = false;
  std::size_t grid_size = 0;

  bool empty() const noexcept { return indices.empty(); }
  double fraction() const noexcept {
    return grid_size == 0 ? 0.0 : static_cast<double>(indices.size()) / static_cast<double>(grid_size);
  }
};

/// {i : |f_i| <= a}, no fallback.
SetEstimate contact_set(const StepFunction& f, double a);
/// {i : f_i >= max f - b}.
SetEstimate eps_maximizer_set(const StepFunction& f, double b);
/// Replace an empty set by the full grid.
void apply_full_fallback(SetEstimate& set);

/// Contact sets for m1 and m2. Both fall back to the full grid only when both
/// are empty; a single empty set stays empty.
std::pair<SetEstimate, SetEstimate> contact_sets_point(const StepFunction& m1, const StepFunction& m2, double a_n);

enum class Branch { First, Second, Both };

struct PointMaximizers {
  SetEstimate first;
  SetEstimate second;
  Branch selected;
  double max_first;
  double max_second;
};

PointMaximizers eps_maximizer_sets_point(const StepFunction& m1, const StepFunction& m2, double b_n, double c_n);

/// {x : |T3(x)| <= a_n} with full-grid fallback.
SetEstimate contact_set_partial(const StepFunction& t3, double a_n);

/// A jump u of the first CDF P in u -> P(u) - Q(u + shift), stored as counts
/// so that resampled values need no search.
struct InnerCandidate {
  std::uint32_t p_count;
  std::uint32_t q_count;
};

/// Near-maximizers in u of one coordinate function at one x. The tail, where
/// the function is 0, is a candidate of its own.
struct InnerSet {
  std::vector<InnerCandidate> selected;
  bool tail_selected = false;
  double max_value = 0.0;
  std::size_t candidates = 0;
};

/// Coordinate k at x, written as u -> P(u) - Q(u + shift):
///   0: A vs Control, shift +x     1: A vs Control, shift -x
///   2: Control vs B, shift -x     3: Control vs B, shift +x
/// so that T3(x) = sum_k sup_u m_k(u, x) - 2.
struct CoordinateSpec {
  Label p;
  Label q;
  double shift_sign;
};

constexpr std::array<CoordinateSpec, 4> kPartialCoordinates{{
    {Label::A, Label::Control, +1.0},
    {Label::A, Label::Control, -1.0},
    {Label::Control, Label::B, -1.0},
    {Label::Control, Label::B, +1.0},
}};

struct PartialMaximizers {
  /// x indices whose T3 is within d_n of max T3.
  SetEstimate outer;
  /// Inner sets, one entry per x index in `x_indices`.
  std::vector<std::size_t> x_indices;
  std::vector<std::array<InnerSet, 4>> inner;
};

InnerSet inner_eps_maximizers(const EmpiricalCdf& p, const EmpiricalCdf& q, double shift, double b_n);

/// Inner b_n-maximizer sets at every x in `x_indices`, plus the outer d_n
/// set over x.
PartialMaximizers eps_maximizer_sets_partial(const EmpiricalCdf& g0, const EmpiricalCdf& ga, const EmpiricalCdf& gb,
                                             const StepFunction& t3, std::span<const std::size_t> x_indices,
                                             double b_n, double d_n);

}  // namespace lasd
