#include <benchmark/benchmark.h>

#include "grassdesign/families.hpp"
#include "grassdesign/optimizer.hpp"
#include "grassdesign/potential.hpp"
#include "grassdesign/zonal.hpp"

using namespace grassdesign;

namespace {

Configuration sized_configuration(int d, int n_per_rank) {
  return random_configuration(
      d, {{1, n_per_rank}, {d - 1, n_per_rank}},
      {{1, 1.0 / n_per_rank}, {d - 1, 1.0 / n_per_rank}}, 12345);
}

void BM_ffp(benchmark::State& state) {
  const Configuration config =
      sized_configuration(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)));
  const int t = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ffp(config, t));
}
BENCHMARK(BM_ffp)->Args({3, 8, 2})->Args({5, 16, 2})->Args({8, 32, 3});

void BM_t_matrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  std::vector<int> ranks;
  for (int k = 1; k < d; ++k) ranks.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(t_matrix(d, ranks, t));
}
BENCHMARK(BM_t_matrix)->Args({4, 2})->Args({8, 4})->Args({12, 6});

void BM_certify(benchmark::State& state) {
  const FamilyDesign family = family_r5_2design();
  for (auto _ : state)
    benchmark::DoNotOptimize(certify(family.configuration, 2, 1e-9));
}
BENCHMARK(BM_certify);

void BM_orbit_r4_lines(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(family_r4_2design(1.0));
}
BENCHMARK(BM_orbit_r4_lines);

void BM_gradient(benchmark::State& state) {
  const Configuration config =
      sized_configuration(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)));
  const auto frames = configuration_frames(config);
  const int t = static_cast<int>(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(ffp_riemannian_gradient(frames, config.weights(), t));
}
BENCHMARK(BM_gradient)->Args({3, 8, 2})->Args({5, 16, 2});

void BM_minimize_50_iters(benchmark::State& state) {
  const Configuration start = random_configuration(
      3, {{1, 6}, {2, 4}}, {{1, 1.0 / 6}, {2, 0.375}}, 777);
  OptimizerSettings settings;
  settings.max_iter = 50;
  settings.grad_tol = 1e-14;
  for (auto _ : state)
    benchmark::DoNotOptimize(minimize_ffp(start, 2, settings));
}
BENCHMARK(BM_minimize_50_iters);

}  // namespace

BENCHMARK_MAIN();
