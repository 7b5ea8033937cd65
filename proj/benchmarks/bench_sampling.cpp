#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "intbm/philox.hpp"
#include "intbm/sampling.hpp"

namespace {

void BM_PhiloxNormal(benchmark::State& state) {
  intbm::RandomStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.next_normal());
}
BENCHMARK(BM_PhiloxNormal);

void BM_RenewalStep(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const intbm::RenewalStep step(n, 1.0 / 1024);
  intbm::RandomStream rng(2, 0);
  std::vector<double> x(n + 1, 0.0);
  for (auto _ : state) {
    step.advance(x, rng);
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_RenewalStep)->Arg(1)->Arg(4);

void BM_LaplacePaths(benchmark::State& state) {
  const double thetas[] = {0.5, 1.0, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(intbm::mc_quadratic_laplace(thetas, 1000, 1024, 3));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_LaplacePaths)->Unit(benchmark::kMillisecond);

}  // namespace
