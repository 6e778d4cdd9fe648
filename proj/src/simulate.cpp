#include "lasd/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <string>

#include "lasd/error.hpp"
#include "lasd/parallel.hpp"

namespace lasd {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 3> kFamilies{{
    {Family::NormalPoint, "normal_point"},
    {Family::TriangularPoint, "triangular_point"},
    {Family::NormalPartial, "normal_partial"},
}};

std::vector<double> normal_draws(Rng& rng, std::size_t n, double mean) {
  std::vector<double> out(n);
  for (auto& v : out) v = mean + rng.normal();
  return out;
}

double local_scale(std::size_t n_per_sample) { return std::sqrt(2.0 * static_cast<double>(n_per_sample)); }

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilies) {
    if (f == family) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, label] : kFamilies) {
    if (label == name) return f;
  }
  return std::nullopt;
}

void validate(const ScenarioSpec& spec) {
  if (spec.parameters.empty()) throw ConfigError("scenario parameter grid is empty");
  if (spec.reps_mc < 1) throw ConfigError("reps_mc must be at least 1");
  if (spec.n_per_sample < 4) throw ConfigError("n_per_sample must be at least 4");
  for (double p : spec.parameters) {
    if (!std::isfinite(p)) throw ConfigError("scenario parameters must be finite");
    if (spec.family == Family::TriangularPoint && std::abs(p) > 0.5) {
      throw ConfigError("triangular eps must lie in [-1/2, 1/2], got " + std::to_string(p));
    }
  }
  const bool partial = spec.family == Family::NormalPartial;
  for (auto k : spec.kinds) {
    if ((samples_required(k) == 3) != partial) {
      throw ConfigError("statistic " + std::string(to_string(k)) + " does not fit family " +
                        std::string(to_string(spec.family)));
    }
  }
  lasd::validate(spec.bootstrap);
}

std::pair<Sample, Sample> gen_normal_point(double mu_b, std::size_t n, Rng& rng) {
  auto a = normal_draws(rng, n, 0.0);
  auto b = normal_draws(rng, n, mu_b);
  return {Sample(std::move(a), Label::A), Sample(std::move(b), Label::B)};
}

double triangular_quantile(double p, double lower, double mode, double upper) {
  if (!(lower <= mode && mode <= upper) || !(lower < upper)) {
    throw ConfigError("triangular parameters need lower <= mode <= upper with lower < upper");
  }
  const double width = upper - lower;
  const double split = (mode - lower) / width;
  if (p < split) return lower + std::sqrt(p * width * (mode - lower));
  return upper - std::sqrt((1.0 - p) * width * (upper - mode));
}

double triangular_cdf(double x, double lower, double mode, double upper) {
  if (x <= lower) return 0.0;
  if (x >= upper) return 1.0;
  const double width = upper - lower;
  if (x <= mode) return (x - lower) * (x - lower) / (width * (mode - lower));
  return 1.0 - (upper - x) * (upper - x) / (width * (upper - mode));
}

std::pair<Sample, Sample> gen_triangular(double eps, std::size_t n, Rng& rng) {
  const double e = eps / local_scale(n);
  std::vector<double> a(n), b(n);
  for (auto& v : a) v = triangular_quantile(rng.uniform_open(), -1.0, 0.0, 1.0);
  for (auto& v : b) v = triangular_quantile(rng.uniform_open(), -1.0 - e, -e, 1.0 + e);
  return {Sample(std::move(a), Label::A), Sample(std::move(b), Label::B)};
}

std::array<Sample, 3> gen_normal_partial(double mu_b, std::size_t n, Rng& rng) {
  auto z0 = normal_draws(rng, n, 0.0);
  auto za = normal_draws(rng, n, 0.0);
  auto zb = normal_draws(rng, n, mu_b);
  return {Sample(std::move(z0), Label::Control), Sample(std::move(za), Label::A), Sample(std::move(zb), Label::B)};
}

std::string RejectionTable::to_csv() const {
  std::string out = "family,parameter,n,kind,rate,mc_se,reps_mc,R,seed\n";
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%zu,%s,%.17g,%.17g,%zu,%zu,%llu\n", std::string(to_string(r.family)).c_str(),
                  r.parameter, r.n, std::string(to_string(r.kind)).c_str(), r.rate, r.mc_se, r.reps_mc,
                  r.reps_bootstrap, static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

RejectionTable run_scenario(const ScenarioSpec& input) {
  ScenarioSpec spec = input;
  if (spec.kinds.empty()) {
    if (spec.family == Family::NormalPartial) {
      spec.kinds = {StatisticKind::V3, StatisticKind::W3};
    } else {
      spec.kinds = {StatisticKind::V1, StatisticKind::V2, StatisticKind::W1, StatisticKind::W2};
    }
  }
  validate(spec);
  const std::size_t n = spec.n_per_sample;
  const std::size_t samples = spec.family == Family::NormalPartial ? 3 : 2;
  const std::vector<std::size_t> sizes(samples, n);
  const std::size_t reps_boot = spec.bootstrap.reps > 0 ? spec.bootstrap.reps : default_reps(sizes);
  const std::size_t params = spec.parameters.size();
  const std::size_t kinds = spec.kinds.size();
  const std::size_t jobs = params * spec.reps_mc;

  // rejected[(p * reps_mc + r) * kinds + k]
  std::vector<unsigned char> rejected(jobs * kinds, 0);
  std::vector<std::exception_ptr> errors(jobs);
  const int threads = in_parallel() ? 1 : std::max(1, current_threads());
  const auto job_count = static_cast<std::int64_t>(jobs);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::int64_t job = 0; job < job_count; ++job) {
    const auto p = static_cast<std::size_t>(job) / spec.reps_mc;
    const auto r = static_cast<std::size_t>(job) % spec.reps_mc;
    try {
      Rng data_rng(derive_seed(spec.bootstrap.seed, {p, r, 0}));
      BootstrapConfig boot = spec.bootstrap;
      boot.reps = reps_boot;
      boot.seed = derive_seed(spec.bootstrap.seed, {p, r, 1});
      const double param = spec.parameters[p];
      std::vector<TestReport> reports;
      switch (spec.family) {
        case Family::NormalPoint: {
          const auto [a, b] = gen_normal_point(param / local_scale(n), n, data_rng);
          reports = run_point_tests(a, b, spec.kinds, boot);
          break;
        }
        case Family::TriangularPoint: {
          const auto [a, b] = gen_triangular(param, n, data_rng);
          reports = run_point_tests(a, b, spec.kinds, boot);
          break;
        }
        case Family::NormalPartial: {
          const auto z = gen_normal_partial(param, n, data_rng);
          reports = run_partial_tests(z[0], z[1], z[2], spec.kinds, boot);
          break;
        }
      }
      for (std::size_t k = 0; k < kinds; ++k) {
        rejected[static_cast<std::size_t>(job) * kinds + k] = reports[k].reject ? 1 : 0;
      }
    } catch (...) {
      errors[static_cast<std::size_t>(job)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RejectionTable table;
  for (std::size_t p = 0; p < params; ++p) {
    for (std::size_t k = 0; k < kinds; ++k) {
      std::size_t count = 0;
      for (std::size_t r = 0; r < spec.reps_mc; ++r) count += rejected[(p * spec.reps_mc + r) * kinds + k];
      const double rate = static_cast<double>(count) / static_cast<double>(spec.reps_mc);
      table.rows.push_back({spec.family, spec.parameters[p], spec.kinds[k], n, rate,
                            std::sqrt(rate * (1.0 - rate) / static_cast<double>(spec.reps_mc)), spec.reps_mc,
                            reps_boot, spec.bootstrap.seed});
    }
  }
  return table;
}

}  // namespace lasd
