#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace lasd {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stream seed from a root seed and a path of indices, so that every
/// (seed, rep) pair owns an independent stream regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept;

/// xoshiro256** seeded through splitmix64. Output is identical on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform on (0, 1).
  double uniform_open() noexcept;
  /// Unbiased uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;
  double normal() noexcept;

 private:
  std::array<std::uint64_t, 4> s_;
};

/// Inverse standard normal CDF (Wichura's AS241, about 1e-16 relative).
double normal_quantile(double p) noexcept;

}  // namespace lasd
