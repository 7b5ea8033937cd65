#include <benchmark/benchmark.h>

#include <vector>

#include "intbm/densities.hpp"

namespace {

void BM_PrecisionFactored(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intbm::r_inverse(n, 1.7));
}
BENCHMARK(BM_PrecisionFactored)->Arg(2)->Arg(6);

void BM_PrecisionDenseInverse(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intbm::covariance_r(n, 1.7).inverse().eval());
}
BENCHMARK(BM_PrecisionDenseInverse)->Arg(2)->Arg(6);

void BM_TransitionDensity(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const intbm::StateVector w(std::vector<double>(n + 1, 0.4));
  const intbm::StateVector a(std::vector<double>(n + 1, 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(intbm::log_transition_density(w, a, 1.2));
}
BENCHMARK(BM_TransitionDensity)->Arg(1)->Arg(4);

}  // namespace
