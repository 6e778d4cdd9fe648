// Bootstrap kernels: serial reference vs. the count-based kernel, serial and
// threaded.
#include <benchmark/benchmark.h>

#include <array>
#include <optional>

#include "lasd/bootstrap.hpp"
#include "lasd/parallel.hpp"
#include "lasd/simulate.hpp"

namespace {

constexpr std::size_t kReps = 64;

struct PointData {
  explicit PointData(std::size_t n) {
    lasd::Rng rng(42);
    auto [a0, b0] = lasd::gen_normal_point(0.0, n, rng);
    a.emplace(std::move(a0));
    b.emplace(std::move(b0));
    setup = lasd::prepare_point(*a, *b, lasd::default_tuning(2 * n));
  }
  std::optional<lasd::Sample> a, b;
  lasd::PointSetup setup;
};

const std::array<lasd::StatisticKind, 2> kPointKinds{lasd::StatisticKind::V1, lasd::StatisticKind::W1};
const std::array<lasd::StatisticKind, 2> kPartialKinds{lasd::StatisticKind::V3, lasd::StatisticKind::W3};

void BM_PointReference(benchmark::State& state) {
  PointData d(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lasd::reference::point_bootstrap_draws(*d.a, *d.b, d.setup, kPointKinds, kReps, 7));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kReps));
}

void BM_PointKernel(benchmark::State& state) {
  PointData d(static_cast<std::size_t>(state.range(0)));
  lasd::set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lasd::point_bootstrap_draws(d.setup, nullptr, kPointKinds, kReps, 7));
  }
  lasd::set_threads(0);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kReps));
}

struct PartialData {
  explicit PartialData(std::size_t n) {
    lasd::Rng rng(43);
    auto z = lasd::gen_normal_partial(2.8, n, rng);
    z0.emplace(z[0]);
    za.emplace(z[1]);
    zb.emplace(z[2]);
    setup = lasd::prepare_partial(*z0, *za, *zb, lasd::default_tuning(3 * n), 256);
  }
  std::optional<lasd::Sample> z0, za, zb;
  lasd::PartialSetup setup;
};

void BM_PartialReference(benchmark::State& state) {
  PartialData d(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lasd::reference::partial_bootstrap_draws(*d.z0, *d.za, *d.zb, d.setup, kPartialKinds, kReps, 7));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kReps));
}

void BM_PartialKernel(benchmark::State& state) {
  PartialData d(static_cast<std::size_t>(state.range(0)));
  lasd::set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lasd::partial_bootstrap_draws(d.setup, kPartialKinds, kReps, 7));
  }
  lasd::set_threads(0);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kReps));
}

}  // namespace

BENCHMARK(BM_PointReference)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointKernel)->Args({100, 1})->Args({1000, 1})->Args({1000, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialReference)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialKernel)->Args({100, 1})->Args({500, 1})->Args({500, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
