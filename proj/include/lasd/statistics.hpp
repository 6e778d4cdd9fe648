#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "lasd/ecdf.hpp"

namespace lasd {

enum class StatisticKind { V1, V2, W1, W2, V3, W3, FosdKs, FosdCvm };

std::string_view to_string(StatisticKind kind);
std::optional<StatisticKind> parse_statistic_kind(std::string_view name);

/// Number of samples a statistic kind needs: 2 or 3.
std::size_t samples_required(StatisticKind kind);
bool is_sup_norm(StatisticKind kind);

struct StatisticValue {
  StatisticKind kind;
  double value;
  double scale_n;     // sqrt(n)
  double domain_max;  // last knot of the criterion grid
};

/// sqrt(n) * max(0, sup f)
StatisticValue v1_stat(const StepFunction& t1, std::size_t n);
/// sqrt(n) * max(0, sup m1, sup m2)
StatisticValue v2_stat(const StepFunction& m1, const StepFunction& m2, std::size_t n);
/// sqrt(n) * (integral of (t1^+)^2)^(1/2)
StatisticValue w1_stat(const StepFunction& t1, std::size_t n);
/// sqrt(n) * (integral of (m1^+)^2 + (m2^+)^2)^(1/2)
StatisticValue w2_stat(const StepFunction& m1, const StepFunction& m2, std::size_t n);
StatisticValue v3_stat(const StepFunction& t3, std::size_t n);
StatisticValue w3_stat(const StepFunction& t3, std::size_t n);
StatisticValue fosd_ks_stat(const StepFunction& diff, std::size_t n);
StatisticValue fosd_cvm_stat(const StepFunction& diff, std::size_t n);

}  // namespace lasd
