#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "advrisk/analytic.hpp"
#include "advrisk/discrete.hpp"
#include "advrisk/mixture.hpp"

using namespace advrisk;

namespace {

EmpiricalMeasure random_cloud(std::uint64_t seed, std::size_t n, std::size_t d,
                              double spread) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<double> flat(n * d);
  for (double& v : flat) v = u(rng);
  return EmpiricalMeasure::uniform(std::move(flat), d);
}

}  // namespace

static void BM_DepsilonMatching(benchmark::State& state) {
  std::size_t n = state.range(0);
  std::size_t d = state.range(1);
  auto mu = random_cloud(1, n, d, 1.0);
  auto nu = random_cloud(2, n, d, 1.0);
  for (auto _ : state) {
    auto cert = depsilon_exact(mu, nu, Metric::euclidean, 0.4);
    benchmark::DoNotOptimize(cert.cost);
  }
}
BENCHMARK(BM_DepsilonMatching)
    ->Args({128, 2})
    ->Args({512, 2})
    ->Args({1024, 16})
    ->Args({1024, 64});

static void BM_DepsilonSweep1D(benchmark::State& state) {
  std::size_t n = state.range(0);
  auto mu = random_cloud(3, n, 1, 2.0);
  auto nu = random_cloud(4, n, 1, 2.0);
  for (auto _ : state) {
    auto cert = depsilon_exact(mu, nu, Metric::euclidean, 0.1);
    benchmark::DoNotOptimize(cert.cost);
  }
}
BENCHMARK(BM_DepsilonSweep1D)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_Wasserstein1D(benchmark::State& state) {
  std::size_t n = state.range(0);
  auto mu = random_cloud(5, n, 1, 2.0);
  auto nu = random_cloud(6, n, 1, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wasserstein_p(mu, nu, Metric::euclidean, 1.0));
  }
}
BENCHMARK(BM_Wasserstein1D)->Arg(1000)->Arg(100000);

static void BM_GaussianGeneral(benchmark::State& state) {
  double eps = 0.0;
  for (auto _ : state) {
    eps += 1e-6;
    auto sol = gaussian_general(0.0, 1.3, 0.7, 0.8, eps);
    benchmark::DoNotOptimize(sol.risk);
  }
}
BENCHMARK(BM_GaussianGeneral);

static void BM_TightAssignment(benchmark::State& state) {
  std::size_t n = state.range(0);
  auto mu = random_cloud(7, n, 8, 1.0);
  auto nu = random_cloud(8, n, 8, 1.0);
  for (auto _ : state) {
    auto perm =
        pair_matching(mu, nu, Metric::euclidean, 0.2, 0.5, MatchingMode::tight);
    benchmark::DoNotOptimize(perm.data());
  }
}
BENCHMARK(BM_TightAssignment)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
