#include "lasd/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lasd/error.hpp"
#include "lasd/parallel.hpp"

namespace lasd {

std::size_t default_reps(std::span<const std::size_t> sample_sizes) {
  if (sample_sizes.empty()) return 499;
  const double avg = static_cast<double>(std::accumulate(sample_sizes.begin(), sample_sizes.end(), std::size_t{0})) /
                     static_cast<double>(sample_sizes.size());
  if (avg < 300.0) return 499;
  if (avg < 750.0) return 999;
  return 1999;
}

void validate(const BootstrapConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(config.alpha));
  }
  if (config.x_points < 2) throw ConfigError("partial-mode grid needs at least 2 points");
  if (config.tuning) {
    const auto& t = *config.tuning;
    for (double v : {t.a_n, t.b_n, t.c_n, t.d_n}) {
      if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("tuning constants must be positive and finite");
    }
  }
}

BootstrapDistribution::BootstrapDistribution(StatisticKind kind, std::vector<double> draws)
    : kind_(kind), sorted_(std::move(draws)) {
  if (sorted_.empty()) throw ConfigError("bootstrap distribution needs at least one draw");
  std::sort(sorted_.begin(), sorted_.end());
}

double BootstrapDistribution::quantile(double q) const noexcept {
  const auto r = static_cast<double>(sorted_.size());
  auto k = static_cast<std::size_t>(std::ceil(q * r));
  k = std::clamp<std::size_t>(k, 1, sorted_.size());
  return sorted_[k - 1];
}

double BootstrapDistribution::p_value(double stat) const noexcept {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), stat);
  const auto at_least = static_cast<double>(sorted_.end() - it);
  return (1.0 + at_least) / (static_cast<double>(sorted_.size()) + 1.0);
}

double BootstrapDistribution::mean() const noexcept {
  long double s = 0.0L;
  for (double v : sorted_) s += v;
  return static_cast<double>(s / static_cast<long double>(sorted_.size()));
}

double BootstrapDistribution::sd() const noexcept {
  if (sorted_.size() < 2) return 0.0;
  const double m = mean();
  long double s = 0.0L;
  for (double v : sorted_) s += (v - m) * (v - m);
  return static_cast<double>(std::sqrt(s / static_cast<long double>(sorted_.size() - 1)));
}

void draw_resample(Rng& rng, std::size_t n, ResampleCounts& out) {
  out.counts.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++out.counts[rng.below(n)];
  out.cum.resize(n + 1);
  out.cum[0] = 0;
  for (std::size_t i = 0; i < n; ++i) out.cum[i + 1] = out.cum[i] + out.counts[i];
}

void identity_resample(std::size_t n, ResampleCounts& out) {
  out.counts.assign(n, 1);
  out.cum.resize(n + 1);
  std::iota(out.cum.begin(), out.cum.end(), 0u);
}

namespace {

std::vector<std::uint32_t> counts_at(const EmpiricalCdf& cdf, std::span<const double> points, double sign) {
  std::vector<std::uint32_t> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = static_cast<std::uint32_t>(cdf.count_le(sign * points[i]));
  return out;
}

double neg_inf() { return -std::numeric_limits<double>::infinity(); }

}  // namespace

// ---------------------------------------------------------------- point case

PointSetup prepare_point(const Sample& a, const Sample& b, const TuningSequences& tuning) {
  PointSetup s;
  s.n_a = a.size();
  s.n_b = b.size();
  s.n = s.n_a + s.n_b;
  s.tuning = tuning;
  const std::array<Sample, 2> both{a, b};
  s.grid = build_evaluation_set(std::span<const Sample>(both));
  const auto fa = build_ecdf(a);
  const auto fb = build_ecdf(b);
  s.crit = evaluate_criterion(fa, fb, s.grid);
  s.a_neg = counts_at(fa, s.grid.points, -1.0);
  s.b_neg = counts_at(fb, s.grid.points, -1.0);
  s.a_pos = counts_at(fa, s.grid.points, 1.0);
  s.b_pos = counts_at(fb, s.grid.points, 1.0);
  s.contact = contact_sets_point(s.crit.m1, s.crit.m2, tuning.a_n);
  s.maximizers = eps_maximizer_sets_point(s.crit.m1, s.crit.m2, tuning.b_n, tuning.c_n);
  return s;
}

void resample_point_processes(const PointSetup& setup, const ResampleCounts& a, const ResampleCounts& b,
                              std::span<double> f1, std::span<double> f2) {
  const double na = static_cast<double>(setup.n_a);
  const double nb = static_cast<double>(setup.n_b);
  const double root_n = std::sqrt(static_cast<double>(setup.n));
  const auto& m1 = setup.crit.m1.values;
  const auto& m2 = setup.crit.m2.values;
  for (std::size_t i = 0; i < m1.size(); ++i) {
    // Same expressions as the criterion evaluation, so identical draws give
    // exactly zero.
    const double losses = static_cast<double>(a.cum[setup.a_neg[i]]) / na - static_cast<double>(b.cum[setup.b_neg[i]]) / nb;
    const double gains = static_cast<double>(a.cum[setup.a_pos[i]]) / na - static_cast<double>(b.cum[setup.b_pos[i]]) / nb;
    f1[i] = root_n * (losses - m1[i]);
    f2[i] = root_n * ((losses + gains) - m2[i]);
  }
}

namespace {

double max_over(std::span<const double> f, std::span<const std::size_t> idx) {
  double best = neg_inf();
  for (std::size_t i : idx) best = std::max(best, f[i]);
  return best;
}

double sq_integral(std::span<const double> f, std::span<const std::size_t> idx, std::span<const double> knots) {
  double total = 0.0;
  for (std::size_t i : idx) {
    if (i + 1 >= knots.size()) continue;
    const double v = std::max(0.0, f[i]);
    total += v * v * (knots[i + 1] - knots[i]);
  }
  return total;
}

}  // namespace

double resampled_v_stat(std::span<const double> f1, std::span<const double> f2, const PointMaximizers& sets) {
  switch (sets.selected) {
    case Branch::First:
      return std::max(0.0, max_over(f1, sets.first.indices));
    case Branch::Second:
      return std::max(0.0, max_over(f2, sets.second.indices));
    case Branch::Both:
      break;
  }
  return std::max({0.0, max_over(f1, sets.first.indices), max_over(f2, sets.second.indices)});
}

double resampled_w_stat(std::span<const double> f1, std::span<const double> f2,
                        const std::pair<SetEstimate, SetEstimate>& contact, std::span<const double> knots) {
  return std::sqrt(sq_integral(f1, contact.first.indices, knots) + sq_integral(f2, contact.second.indices, knots));
}

// ----------------------------------------------------------------- FOSD case

FosdSetup prepare_fosd(const Sample& a, const Sample& b, const TuningSequences& tuning) {
  FosdSetup s;
  s.n_a = a.size();
  s.n_b = b.size();
  s.n = s.n_a + s.n_b;
  s.tuning = tuning;
  const std::array<Sample, 2> both{a, b};
  const auto grid = build_support_grid(std::span<const Sample>(both));
  const auto ga = build_ecdf(a);
  const auto gb = build_ecdf(b);
  s.diff = fosd_process(ga, gb, grid);
  s.a_count = counts_at(ga, grid, 1.0);
  s.b_count = counts_at(gb, grid, 1.0);
  s.contact = contact_set(s.diff, tuning.a_n);
  apply_full_fallback(s.contact);
  s.maximizers = eps_maximizer_set(s.diff, tuning.b_n);
  return s;
}

void resample_fosd_process(const FosdSetup& setup, const ResampleCounts& a, const ResampleCounts& b,
                           std::span<double> g) {
  const double na = static_cast<double>(setup.n_a);
  const double nb = static_cast<double>(setup.n_b);
  const double root_n = std::sqrt(static_cast<double>(setup.n));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double d =
        static_cast<double>(a.cum[setup.a_count[i]]) / na - static_cast<double>(b.cum[setup.b_count[i]]) / nb;
    g[i] = root_n * (d - setup.diff.values[i]);
  }
}

double resampled_fosd_ks(std::span<const double> g, const SetEstimate& maximizers) {
  return std::max(0.0, max_over(g, maximizers.indices));
}

double resampled_fosd_cvm(std::span<const double> g, const SetEstimate& contact, std::span<const double> knots) {
  return std::sqrt(sq_integral(g, contact.indices, knots));
}

// -------------------------------------------------------------- partial case

PartialSetup prepare_partial(const Sample& z0, const Sample& za, const Sample& zb, const TuningSequences& tuning,
                             std::size_t x_points) {
  PartialSetup s;
  s.n_0 = z0.size();
  s.n_a = za.size();
  s.n_b = zb.size();
  s.n = s.n_0 + s.n_a + s.n_b;
  s.tuning = tuning;
  s.grid = build_grid2d(z0, za, zb, x_points);
  const auto g0 = build_ecdf(z0);
  const auto ga = build_ecdf(za);
  const auto gb = build_ecdf(zb);
  s.crit = evaluate_partial_criterion(g0, ga, gb, s.grid);
  s.contact = contact_set_partial(s.crit.t3, tuning.a_n);
  const auto outer = eps_maximizer_set(s.crit.t3, tuning.d_n);
  std::vector<std::size_t> needed;
  std::set_union(outer.indices.begin(), outer.indices.end(), s.contact.indices.begin(), s.contact.indices.end(),
                 std::back_inserter(needed));
  s.maximizers = eps_maximizer_sets_partial(g0, ga, gb, s.crit.t3, needed, tuning.b_n, tuning.d_n);
  const auto position = [&](std::size_t x_index) {
    return static_cast<std::size_t>(std::lower_bound(needed.begin(), needed.end(), x_index) - needed.begin());
  };
  for (std::size_t i : s.maximizers.outer.indices) s.outer_pos.push_back(position(i));
  for (std::size_t i : s.contact.indices) s.contact_pos.push_back(position(i));
  return s;
}

double centered_coordinate(std::int64_t dp, double np, std::int64_t dq, double nq, double root_n) noexcept {
  return root_n * (static_cast<double>(dp) / np - static_cast<double>(dq) / nq);
}

void resample_partial_processes(const PartialSetup& setup, const ResampleCounts& z0, const ResampleCounts& za,
                                const ResampleCounts& zb, std::span<double> inner_sum) {
  const double root_n = std::sqrt(static_cast<double>(setup.n));
  const auto pick = [&](Label l) -> const ResampleCounts& { return l == Label::A ? za : (l == Label::B ? zb : z0); };
  const auto size_of = [&](Label l) {
    return static_cast<double>(l == Label::A ? setup.n_a : (l == Label::B ? setup.n_b : setup.n_0));
  };
  std::array<const std::uint32_t*, 4> p_cum{};
  std::array<const std::uint32_t*, 4> q_cum{};
  std::array<double, 4> np{};
  std::array<double, 4> nq{};
  for (std::size_t k = 0; k < 4; ++k) {
    p_cum[k] = pick(kPartialCoordinates[k].p).cum.data();
    q_cum[k] = pick(kPartialCoordinates[k].q).cum.data();
    np[k] = size_of(kPartialCoordinates[k].p);
    nq[k] = size_of(kPartialCoordinates[k].q);
  }
  const auto& inner = setup.maximizers.inner;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& set = inner[j][k];
      double best = set.tail_selected ? 0.0 : neg_inf();
      for (const auto& c : set.selected) {
        const auto dp = static_cast<std::int64_t>(p_cum[k][c.p_count]) - static_cast<std::int64_t>(c.p_count);
        const auto dq = static_cast<std::int64_t>(q_cum[k][c.q_count]) - static_cast<std::int64_t>(c.q_count);
        best = std::max(best, centered_coordinate(dp, np[k], dq, nq[k], root_n));
      }
      sum += best;
    }
    inner_sum[j] = sum;
  }
}

double resampled_v3_stat(std::span<const double> inner_sum, const PartialSetup& setup) {
  double best = 0.0;
  for (std::size_t pos : setup.outer_pos) best = std::max(best, inner_sum[pos]);
  return best;
}

double resampled_w3_stat(std::span<const double> inner_sum, const PartialSetup& setup) {
  const auto& knots = setup.crit.t3.knots;
  double total = 0.0;
  for (std::size_t j = 0; j < setup.contact.indices.size(); ++j) {
    const std::size_t i = setup.contact.indices[j];
    if (i + 1 >= knots.size()) continue;
    const double v = std::max(0.0, inner_sum[setup.contact_pos[j]]);
    total += v * v * (knots[i + 1] - knots[i]);
  }
  return std::sqrt(total);
}

// ------------------------------------------------------------------ engines

namespace {

bool is_fosd(StatisticKind k) { return k == StatisticKind::FosdKs || k == StatisticKind::FosdCvm; }

int loop_threads(std::size_t reps) {
  if (in_parallel() || reps < 2) return 1;
  return std::max(1, current_threads());
}

}  // namespace

std::vector<std::vector<double>> point_bootstrap_draws(const PointSetup& point, const FosdSetup* fosd,
                                                       std::span<const StatisticKind> kinds, std::size_t reps,
                                                       std::uint64_t seed) {
  std::vector<std::vector<double>> out(kinds.size(), std::vector<double>(reps));
  for (auto k : kinds) {
    if (is_fosd(k) && fosd == nullptr) throw ConfigError("FOSD statistic requested without FOSD setup");
    if (samples_required(k) != 2) throw ConfigError("statistic " + std::string(to_string(k)) + " needs three samples");
  }
  const std::size_t grid = point.grid.size();
  const std::size_t levels = fosd != nullptr ? fosd->diff.knots.size() : 0;
  const int threads = loop_threads(reps);
  const auto r_count = static_cast<std::int64_t>(reps);

#pragma omp parallel num_threads(threads) if (threads > 1)
  {
    ResampleCounts ra;
    ResampleCounts rb;
    std::vector<double> f1(grid), f2(grid), g(levels);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < r_count; ++r) {
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(r)}));
      draw_resample(rng, point.n_a, ra);
      draw_resample(rng, point.n_b, rb);
      bool have_point = false;
      bool have_fosd = false;
      for (std::size_t j = 0; j < kinds.size(); ++j) {
        const auto kind = kinds[j];
        if (is_fosd(kind)) {
          if (!have_fosd) {
            resample_fosd_process(*fosd, ra, rb, g);
            have_fosd = true;
          }
          out[j][static_cast<std::size_t>(r)] = kind == StatisticKind::FosdKs
                                                    ? resampled_fosd_ks(g, fosd->maximizers)
                                                    : resampled_fosd_cvm(g, fosd->contact, fosd->diff.knots);
          continue;
        }
        if (!have_point) {
          resample_point_processes(point, ra, rb, f1, f2);
          have_point = true;
        }
        out[j][static_cast<std::size_t>(r)] = is_sup_norm(kind)
                                                  ? resampled_v_stat(f1, f2, point.maximizers)
                                                  : resampled_w_stat(f1, f2, point.contact, point.grid.points);
      }
    }
  }
  return out;
}

std::vector<std::vector<double>> partial_bootstrap_draws(const PartialSetup& setup,
                                                         std::span<const StatisticKind> kinds, std::size_t reps,
                                                         std::uint64_t seed) {
  for (auto k : kinds) {
    if (k != StatisticKind::V3 && k != StatisticKind::W3) {
      throw ConfigError("statistic " + std::string(to_string(k)) + " is not a partial-identification statistic");
    }
  }
  std::vector<std::vector<double>> out(kinds.size(), std::vector<double>(reps));
  const int threads = loop_threads(reps);
  const auto r_count = static_cast<std::int64_t>(reps);
  const std::size_t xs = setup.maximizers.inner.size();

#pragma omp parallel num_threads(threads) if (threads > 1)
  {
    ResampleCounts r0, ra, rb;
    std::vector<double> sum(xs);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < r_count; ++r) {
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(r)}));
      draw_resample(rng, setup.n_0, r0);
      draw_resample(rng, setup.n_a, ra);
      draw_resample(rng, setup.n_b, rb);
      resample_partial_processes(setup, r0, ra, rb, sum);
      for (std::size_t j = 0; j < kinds.size(); ++j) {
        out[j][static_cast<std::size_t>(r)] =
            kinds[j] == StatisticKind::V3 ? resampled_v3_stat(sum, setup) : resampled_w3_stat(sum, setup);
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------ drivers

namespace {

SetSummary summarize(std::string name, const SetEstimate& s) {
  return {std::move(name), s.indices.size(), s.grid_size, s.tuning, s.fallback_used};
}

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::First:
      return "first";
    case Branch::Second:
      return "second";
    case Branch::Both:
      break;
  }
  return "both";
}

TuningSequences resolve_tuning(const BootstrapConfig& config, std::size_t n) {
  if (config.tuning) return *config.tuning;
  return default_tuning(n, config.multipliers);
}

TestReport finish_report(StatisticValue stat, std::vector<double> draws, const BootstrapConfig& config,
                         std::size_t reps) {
  TestReport rep;
  BootstrapDistribution dist(stat.kind, std::move(draws));
  rep.statistic = stat;
  rep.alpha = config.alpha;
  rep.reps = reps;
  rep.seed = config.seed;
  rep.critical_value = dist.quantile(1.0 - config.alpha);
  rep.p_value = dist.p_value(stat.value);
  rep.reject = stat.value > rep.critical_value;
  rep.boot_mean = dist.mean();
  rep.boot_sd = dist.sd();
  rep.boot_min = dist.sorted_draws().front();
  rep.boot_max = dist.sorted_draws().back();
  return rep;
}

void add_tie_flag(TestReport& rep) {
  if (rep.tie_fraction > 0.10) rep.flags.emplace_back("tie_fraction_above_10pct");
}

}  // namespace

std::vector<TestReport> run_point_tests(const Sample& a, const Sample& b, std::span<const StatisticKind> kinds,
                                        const BootstrapConfig& config) {
  validate(config);
  if (kinds.empty()) throw ConfigError("no statistics requested");
  const std::array<std::size_t, 2> sizes{a.size(), b.size()};
  const std::size_t n = a.size() + b.size();
  const auto tuning = resolve_tuning(config, n);
  const std::size_t reps = config.reps > 0 ? config.reps : default_reps(sizes);
  const auto point = prepare_point(a, b, tuning);
  const bool any_fosd = std::any_of(kinds.begin(), kinds.end(), is_fosd);
  std::optional<FosdSetup> fosd;
  if (any_fosd) fosd = prepare_fosd(a, b, tuning);
  auto draws = point_bootstrap_draws(point, fosd ? &*fosd : nullptr, kinds, reps, config.seed);

  const std::array<Sample, 2> both{a, b};
  const double ties = tie_fraction(std::span<const Sample>(both));
  const double gap = mean_gap(a, b);
  std::vector<TestReport> out;
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    const auto kind = kinds[j];
    StatisticValue stat{};
    switch (kind) {
      case StatisticKind::V1:
        stat = v1_stat(point.crit.t1, n);
        break;
      case StatisticKind::V2:
        stat = v2_stat(point.crit.m1, point.crit.m2, n);
        break;
      case StatisticKind::W1:
        stat = w1_stat(point.crit.t1, n);
        break;
      case StatisticKind::W2:
        stat = w2_stat(point.crit.m1, point.crit.m2, n);
        break;
      case StatisticKind::FosdKs:
        stat = fosd_ks_stat(fosd->diff, n);
        break;
      case StatisticKind::FosdCvm:
        stat = fosd_cvm_stat(fosd->diff, n);
        break;
      default:
        throw ConfigError("statistic " + std::string(to_string(kind)) + " needs three samples");
    }
    auto rep = finish_report(stat, std::move(draws[j]), config, reps);
    rep.tuning = tuning;
    rep.sample_sizes = {a.size(), b.size()};
    rep.n = n;
    rep.mean_gap = gap;
    rep.tie_fraction = ties;
    if (is_fosd(kind)) {
      if (kind == StatisticKind::FosdKs) {
        rep.sets.push_back(summarize("maximizer", fosd->maximizers));
      } else {
        rep.sets.push_back(summarize("contact", fosd->contact));
        if (fosd->contact.fallback_used) rep.flags.emplace_back("contact_fallback_full_grid");
      }
    } else if (is_sup_norm(kind)) {
      rep.sets.push_back(summarize("maximizer_1", point.maximizers.first));
      rep.sets.push_back(summarize("maximizer_2", point.maximizers.second));
      rep.branch = std::string(branch_name(point.maximizers.selected));
    } else {
      rep.sets.push_back(summarize("contact_1", point.contact.first));
      rep.sets.push_back(summarize("contact_2", point.contact.second));
      if (point.contact.first.fallback_used) rep.flags.emplace_back("contact_fallback_full_grid");
      if (point.contact.first.empty() != point.contact.second.empty()) {
        rep.flags.emplace_back("one_contact_set_empty");
      }
    }
    if (gap < 0.0) rep.flags.emplace_back("negative_mean_gap");
    add_tie_flag(rep);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<TestReport> run_partial_tests(const Sample& z0, const Sample& za, const Sample& zb,
                                          std::span<const StatisticKind> kinds, const BootstrapConfig& config) {
  validate(config);
  if (kinds.empty()) throw ConfigError("no statistics requested");
  const std::array<std::size_t, 3> sizes{z0.size(), za.size(), zb.size()};
  const std::size_t n = z0.size() + za.size() + zb.size();
  const auto tuning = resolve_tuning(config, n);
  const std::size_t reps = config.reps > 0 ? config.reps : default_reps(sizes);
  const auto setup = prepare_partial(z0, za, zb, tuning, config.x_points);
  auto draws = partial_bootstrap_draws(setup, kinds, reps, config.seed);

  const std::array<Sample, 3> all{z0, za, zb};
  const double ties = tie_fraction(std::span<const Sample>(all));
  const double gap = mean_gap(za, zb);
  std::vector<TestReport> out;
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    const auto kind = kinds[j];
    const auto stat = kind == StatisticKind::V3 ? v3_stat(setup.crit.t3, n) : w3_stat(setup.crit.t3, n);
    auto rep = finish_report(stat, std::move(draws[j]), config, reps);
    rep.tuning = tuning;
    rep.sample_sizes = {z0.size(), za.size(), zb.size()};
    rep.n = n;
    rep.mean_gap = gap;
    rep.tie_fraction = ties;
    if (kind == StatisticKind::V3) {
      rep.sets.push_back(summarize("maximizer_nec", setup.maximizers.outer));
    } else {
      rep.sets.push_back(summarize("contact_nec", setup.contact));
      if (setup.contact.fallback_used) rep.flags.emplace_back("contact_fallback_full_grid");
    }
    add_tie_flag(rep);
    out.push_back(std::move(rep));
  }
  return out;
}

TestReport run_test(std::span<const Sample> samples, const BootstrapConfig& config, StatisticKind kind) {
  const auto find = [&](Label l) -> const Sample* {
    const Sample* hit = nullptr;
    for (const auto& s : samples) {
      if (s.label() != l) continue;
      if (hit != nullptr) throw InputError("more than one sample labelled " + std::string(to_string(l)));
      hit = &s;
    }
    return hit;
  };
  const Sample* a = find(Label::A);
  const Sample* b = find(Label::B);
  const Sample* c = find(Label::Control);
  if (a == nullptr || b == nullptr) throw InputError("samples labelled A and B are required");
  const std::array<StatisticKind, 1> one{kind};
  if (samples_required(kind) == 3) {
    if (c == nullptr || samples.size() != 3) throw InputError("V3 and W3 need samples labelled Control, A and B");
    return run_partial_tests(*c, *a, *b, one, config).front();
  }
  if (c != nullptr || samples.size() != 2) {
    throw InputError("statistic " + std::string(to_string(kind)) + " takes exactly the samples A and B");
  }
  return run_point_tests(*a, *b, one, config).front();
}

}  // namespace lasd
