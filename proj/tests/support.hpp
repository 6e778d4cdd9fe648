#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "lasd/ecdf.hpp"

namespace lasd::test {

inline std::vector<double> normal_values(std::mt19937_64& gen, std::size_t n, double mean = 0.0, double sd = 1.0) {
  std::normal_distribution<double> dist(mean, sd);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(gen);
  return out;
}

// Small integer-valued data, so ties and exact arithmetic both show up.
inline std::vector<double> lattice_values(std::mt19937_64& gen, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(gen);
  return out;
}

// Straight count, no binary search.
inline double count_cdf(const std::vector<double>& values, double x) {
  std::size_t c = 0;
  for (double v : values) c += v <= x ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(values.size());
}

inline double count_left(const std::vector<double>& values, double x) {
  std::size_t c = 0;
  for (double v : values) c += v < x ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(values.size());
}

inline std::vector<double> as_vector(const Sample& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace lasd::test
