#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace intbm::verify {

struct CheckResult {
  std::string test;
  double statistic = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 42;
  std::size_t paths = 100000;
  std::size_t grid = 1024;
  std::vector<double> thetas{0.5, 1.0, 2.0};
};

enum class Suite { exact, spectral, density, mc, all };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);

// Exact identities; statistic = number of failing cases, bound 0.
CheckResult exact_identities(std::size_t max_dim = 50);
CheckResult rho_reference_values();
CheckResult spectral_orthogonality(unsigned max_order = 8);
CheckResult innovation_variance(unsigned max_order = 8);

// Floating-point agreement; statistic = worst discrepancy.
CheckResult normalizing_constant(unsigned max_order = 10);
std::vector<CheckResult> transition_density_routes(std::uint64_t seed, std::size_t probes = 1000);
CheckResult precision_factorization();
CheckResult fourier_pair();

// Monte Carlo; statistics are z-scores or distances against stated bands.
std::vector<CheckResult> laplace_functional(const Options& options);
std::vector<CheckResult> sampler_laws(const Options& options);
CheckResult determinism(std::uint64_t seed);

/// (1/2pi) \int H_n(v) e^{ivt} dv by Gauss-Legendre panels over half-periods of
/// e^{ivt}, with the partial sums accelerated by repeated averaging.
double fourier_inversion_h(unsigned n, double t);

std::vector<CheckResult> run_suite(Suite suite, const Options& options);

/// [{"test", "statistic", "bound", "pass", "detail"}, ...]
std::string report_to_json(const std::vector<CheckResult>& results);

}  // namespace intbm::verify
