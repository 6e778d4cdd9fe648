#include "lasd/statistics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace lasd {

namespace {

constexpr std::array<std::pair<StatisticKind, std::string_view>, 8> kNames{{
    {StatisticKind::V1, "V1"},
    {StatisticKind::V2, "V2"},
    {StatisticKind::W1, "W1"},
    {StatisticKind::W2, "W2"},
    {StatisticKind::V3, "V3"},
    {StatisticKind::W3, "W3"},
    {StatisticKind::FosdKs, "FOSD_KS"},
    {StatisticKind::FosdCvm, "FOSD_CvM"},
}};

double domain_max(const StepFunction& f) { return f.knots.empty() ? 0.0 : f.knots.back(); }

double root_n(std::size_t n) { return std::sqrt(static_cast<double>(n)); }

StatisticValue sup_stat(StatisticKind kind, const StepFunction& f, std::size_t n) {
  const double s = root_n(n);
  return {kind, s * std::max(0.0, f.max_value()), s, domain_max(f)};
}

StatisticValue l2_stat(StatisticKind kind, const StepFunction& f, std::size_t n) {
  const double s = root_n(n);
  return {kind, s * std::sqrt(f.integral_positive_sq()), s, domain_max(f)};
}

}  // namespace

std::string_view to_string(StatisticKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<StatisticKind> parse_statistic_kind(std::string_view name) {
  for (const auto& [k, label] : kNames) {
    if (label.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size(); ++i) {
      const auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; };
      if (lower(label[i]) != lower(name[i])) {
        same = false;
        break;
      }
    }
    if (same) return k;
  }
  return std::nullopt;
}

std::size_t samples_required(StatisticKind kind) {
  return (kind == StatisticKind::V3 || kind == StatisticKind::W3) ? 3 : 2;
}

bool is_sup_norm(StatisticKind kind) {
  return kind == StatisticKind::V1 || kind == StatisticKind::V2 || kind == StatisticKind::V3 ||
         kind == StatisticKind::FosdKs;
}

StatisticValue v1_stat(const StepFunction& t1, std::size_t n) { return sup_stat(StatisticKind::V1, t1, n); }

StatisticValue v2_stat(const StepFunction& m1, const StepFunction& m2, std::size_t n) {
  const double s = root_n(n);
  const double sup = std::max({0.0, m1.max_value(), m2.max_value()});
  return {StatisticKind::V2, s * sup, s, std::max(domain_max(m1), domain_max(m2))};
}

StatisticValue w1_stat(const StepFunction& t1, std::size_t n) { return l2_stat(StatisticKind::W1, t1, n); }

StatisticValue w2_stat(const StepFunction& m1, const StepFunction& m2, std::size_t n) {
  const double s = root_n(n);
  const double total = m1.integral_positive_sq() + m2.integral_positive_sq();
  return {StatisticKind::W2, s * std::sqrt(total), s, std::max(domain_max(m1), domain_max(m2))};
}

StatisticValue v3_stat(const StepFunction& t3, std::size_t n) { return sup_stat(StatisticKind::V3, t3, n); }

StatisticValue w3_stat(const StepFunction& t3, std::size_t n) { return l2_stat(StatisticKind::W3, t3, n); }

StatisticValue fosd_ks_stat(const StepFunction& diff, std::size_t n) {
  return sup_stat(StatisticKind::FosdKs, diff, n);
}

StatisticValue fosd_cvm_stat(const StepFunction& diff, std::size_t n) {
  return l2_stat(StatisticKind::FosdCvm, diff, n);
}

}  // namespace lasd
