#include <benchmark/benchmark.h>

#include <vector>

#include "hardedge/core/random.hpp"
#include "hardedge/experiments/energy.hpp"
#include "hardedge/experiments/ensemble.hpp"
#include "hardedge/sde/eigen_sde.hpp"

using namespace hardedge;

namespace {

SampleSet gaussian_cloud(std::size_t n, std::size_t d, std::uint64_t stream) {
  RandomSource rng(7, stream);
  SampleSet s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j) s(i, j) = rng.normal();
  return s;
}

void BM_EnergySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SampleSet a = gaussian_cloud(n, 3, 1);
  const SampleSet b = gaussian_cloud(n, 3, 2);
  for (auto _ : state) {
    RandomSource rng(1, 0);
    benchmark::DoNotOptimize(energy_permutation_test_serial(a, b, 200, rng));
  }
}

void BM_EnergyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SampleSet a = gaussian_cloud(n, 3, 1);
  const SampleSet b = gaussian_cloud(n, 3, 2);
  set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    RandomSource rng(1, 0);
    benchmark::DoNotOptimize(energy_permutation_test(a, b, 200, rng));
  }
  set_thread_count(0);
}

// Ensemble of N=3 eigenvalue paths to t=0.1.
void BM_Ensemble(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const bool parallel = state.range(1) != 0;
  SdeParams params;
  params.dt_max = 1e-3;
  for (auto _ : state) {
    auto out = run_replicas<double>(
        n,
        [&](std::size_t r) {
          std::vector<double> x{3.0, 2.0, 1.0};
          RandomSource rng(3, r);
          advance(x, params, 0.1, rng);
          return x[2];
        },
        parallel);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(BM_EnergySerial)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyParallel)
    ->Args({500, 1})
    ->Args({1000, 1})
    ->Args({2000, 1})
    ->Args({2000, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ensemble)->Args({2000, 0})->Args({2000, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
