#include <benchmark/benchmark.h>

#include "intbm/exact_core.hpp"
#include "intbm/spectral.hpp"

namespace {

void BM_ProductWithInverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = intbm::a_matrix(n);
  const auto a_inv = intbm::a_inverse_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize((a * a_inv).is_identity());
}
BENCHMARK(BM_ProductWithInverse)->Arg(10)->Arg(25)->Arg(50);

void BM_RhoClosedForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intbm::rho_matrix(n));
}
BENCHMARK(BM_RhoClosedForm)->Arg(6)->Arg(12);

void BM_RhoByGaussJordan(benchmark::State& state) {
  const auto m = intbm::rho_inverse_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.inverse());
}
BENCHMARK(BM_RhoByGaussJordan)->Arg(6)->Arg(12);

void BM_SpectralInnerProduct(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto f = intbm::transfer_h_hat(n);
  for (auto _ : state) benchmark::DoNotOptimize(intbm::spectral_inner_product(f, f));
}
BENCHMARK(BM_SpectralInnerProduct)->Arg(2)->Arg(8);

}  // namespace
