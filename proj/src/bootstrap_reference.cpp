#include <cmath>
#include <limits>
#include <utility>

#include "lasd/bootstrap.hpp"
#include "lasd/error.hpp"

namespace lasd::reference {

namespace {

// Same call order as draw_resample, so both paths see identical indices.
EmpiricalCdf resample(Rng& rng, const Sample& s) {
  const auto values = s.values();
  std::vector<double> out(values.size());
  for (auto& v : out) v = values[rng.below(values.size())];
  return EmpiricalCdf(std::move(out));
}

}  // namespace

std::vector<std::vector<double>> point_bootstrap_draws(const Sample& a, const Sample& b, const PointSetup& setup,
                                                       std::span<const StatisticKind> kinds, std::size_t reps,
                                                       std::uint64_t seed) {
  std::vector<std::vector<double>> out(kinds.size(), std::vector<double>(reps));
  const double root_n = std::sqrt(static_cast<double>(setup.n));
  const auto fa = build_ecdf(a);
  const auto fb = build_ecdf(b);
  const std::array<Sample, 2> both{a, b};
  const auto levels = build_support_grid(std::span<const Sample>(both));
  const auto diff = fosd_process(fa, fb, levels);
  for (std::size_t r = 0; r < reps; ++r) {
    Rng rng(derive_seed(seed, {r}));
    const auto fa_star = resample(rng, a);
    const auto fb_star = resample(rng, b);
    auto [m1, m2] = t2_process(fa_star, fb_star, setup.grid);
    std::vector<double> f1(m1.values.size()), f2(m2.values.size());
    for (std::size_t i = 0; i < f1.size(); ++i) {
      f1[i] = root_n * (m1.values[i] - setup.crit.m1.values[i]);
      f2[i] = root_n * (m2.values[i] - setup.crit.m2.values[i]);
    }
    const auto g_star = fosd_process(fa_star, fb_star, levels);
    std::vector<double> g(levels.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = root_n * (g_star.values[i] - diff.values[i]);

    for (std::size_t j = 0; j < kinds.size(); ++j) {
      const auto kind = kinds[j];
      double v = 0.0;
      if (kind == StatisticKind::FosdKs || kind == StatisticKind::FosdCvm) {
        auto contact = contact_set(diff, setup.tuning.a_n);
        apply_full_fallback(contact);
        v = kind == StatisticKind::FosdKs ? resampled_fosd_ks(g, eps_maximizer_set(diff, setup.tuning.b_n))
                                          : resampled_fosd_cvm(g, contact, levels);
      } else if (is_sup_norm(kind)) {
        v = resampled_v_stat(f1, f2, setup.maximizers);
      } else {
        v = resampled_w_stat(f1, f2, setup.contact, setup.grid.points);
      }
      out[j][r] = v;
    }
  }
  return out;
}

std::vector<std::vector<double>> partial_bootstrap_draws(const Sample& z0, const Sample& za, const Sample& zb,
                                                         const PartialSetup& setup,
                                                         std::span<const StatisticKind> kinds, std::size_t reps,
                                                         std::uint64_t seed) {
  std::vector<std::vector<double>> out(kinds.size(), std::vector<double>(reps));
  const double root_n = std::sqrt(static_cast<double>(setup.n));
  const auto g0 = build_ecdf(z0);
  const auto ga = build_ecdf(za);
  const auto gb = build_ecdf(zb);
  const auto& x_idx = setup.maximizers.x_indices;
  for (std::size_t r = 0; r < reps; ++r) {
    Rng rng(derive_seed(seed, {r}));
    const auto g0_star = resample(rng, z0);
    const auto ga_star = resample(rng, za);
    const auto gb_star = resample(rng, zb);
    const auto orig = [&](Label l) -> const EmpiricalCdf& { return l == Label::A ? ga : (l == Label::B ? gb : g0); };
    const auto star = [&](Label l) -> const EmpiricalCdf& {
      return l == Label::A ? ga_star : (l == Label::B ? gb_star : g0_star);
    };
    std::vector<double> sum(x_idx.size());
    for (std::size_t j = 0; j < x_idx.size(); ++j) {
      const double x = setup.grid.x_points[x_idx[j]];
      double total = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& spec = kPartialCoordinates[k];
        const auto& p = orig(spec.p);
        const auto& q = orig(spec.q);
        const auto& set = setup.maximizers.inner[j][k];
        double best = set.tail_selected ? 0.0 : -std::numeric_limits<double>::infinity();
        for (const auto& c : set.selected) {
          const double u = p.sorted_values()[c.p_count - 1];
          const double at = u + spec.shift_sign * x;
          const auto dp = static_cast<std::int64_t>(star(spec.p).count_le(u)) - static_cast<std::int64_t>(p.count_le(u));
          const auto dq = static_cast<std::int64_t>(star(spec.q).count_le(at)) - static_cast<std::int64_t>(q.count_le(at));
          best = std::max(best, centered_coordinate(dp, static_cast<double>(p.n()), dq, static_cast<double>(q.n()),
                                                    root_n));
        }
        total += best;
      }
      sum[j] = total;
    }
    for (std::size_t j = 0; j < kinds.size(); ++j) {
      out[j][r] = kinds[j] == StatisticKind::V3 ? resampled_v3_stat(sum, setup) : resampled_w3_stat(sum, setup);
    }
  }
  return out;
}

}  // namespace lasd::reference
