// Acceptance checks, one line per criterion:
//   intbm_acceptance            run all criteria
//   intbm_acceptance 3 7        run the listed criteria
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "intbm/densities.hpp"
#include "intbm/exact_core.hpp"
#include "intbm/sampling.hpp"
#include "intbm/serialization.hpp"
#include "intbm/spectral.hpp"
#include "intbm/verify.hpp"

#ifndef INTBM_TOOL_PATH
#error "INTBM_TOOL_PATH must name the intbm executable"
#endif

using namespace intbm;

namespace {

// Pinned tolerances and settings.
constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kIdentityMaxDim = 50;
constexpr double kIdentitySeconds = 10.0;
constexpr unsigned kSpectralMaxOrder = 8;
constexpr double kSpectralSeconds = 5.0;
constexpr unsigned kNormalizingMaxOrder = 10;
constexpr double kNormalizingRelTol = 1e-12;
constexpr unsigned kDensityMaxOrder = 4;
constexpr std::size_t kDensityProbes = 1000;
constexpr double kRouteRelTol = 1e-8;
constexpr double kSymmetryRelTol = 1e-9;
constexpr unsigned kPrecisionMaxOrder = 6;
constexpr double kPrecisionOffDiagTol = 1e-6;
constexpr unsigned kFourierMaxOrder = 4;
constexpr double kFourierTol = 1e-8;
constexpr std::size_t kPaths = 100000;
constexpr std::size_t kGrid = 1024;
constexpr double kBand = 3.0;
constexpr double kMcSeconds = 120.0;
constexpr unsigned kSamplerMaxOrder = 3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ExactMatrix from_ints(const std::vector<std::vector<BigRational>>& rows) {
  ExactMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Outcome exact_identities() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t failures = 0;
  for (std::size_t n = 0; n <= kIdentityMaxDim; ++n) {
    const ExactMatrix a = a_matrix(n);
    const ExactMatrix g = gamma_matrix(n);
    const ExactMatrix b = b_matrix(n);
    failures += !(a * g == b);
    failures += !(g * star(g)).is_identity();
    failures += !(a == star(b));
    failures += !(a * a_inverse_matrix(n)).is_identity();
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < kIdentitySeconds,
          std::to_string(failures) + " failing identities for N <= 50, " + fmt(elapsed) + " s (limit 10 s)"};
}

Outcome rho_reference() {
  const BigRational h(1, 2), third(1, 3);
  bool ok = rho_inverse_matrix(1) == from_ints({{1, h}, {h, third}});
  ok = ok && rho_matrix(1) == from_ints({{4, -6}, {-6, 12}});
  const ExactMatrix rho2 = from_ints({{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}});
  ok = ok && rho_matrix(2) == rho2;
  ok = ok && rho_inverse_matrix(2).inverse() == rho2;
  ok = ok && (rho2 * rho_inverse_matrix(2)).is_identity();
  return {ok, "rho(1), rho^{-1}(1), rho(2) with (2,0) = 30; inversion oracle agrees"};
}

Outcome spectral_orthogonality() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t failures = 0;
  for (unsigned j = 0; j <= kSpectralMaxOrder; ++j) {
    for (unsigned k = 0; k <= kSpectralMaxOrder; ++k) {
      const BigRational expected = j == k ? BigRational(1, 2 * k + 1) : BigRational(0);
      failures += !(spectral_inner_product(transfer_g(j), transfer_g(k)) == expected);
    }
  }
  for (unsigned n = 1; n <= kSpectralMaxOrder; ++n)
    for (unsigned m = 0; m < n; ++m) failures += !spectral_inner_product(transfer_h_hat(n), transfer_h(m)).is_zero();
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < kSpectralSeconds,
          std::to_string(failures) + " failing inner products, " + fmt(elapsed) + " s (limit 5 s)"};
}

Outcome innovation_variance() {
  std::size_t failures = 0;
  for (unsigned n = 0; n <= kSpectralMaxOrder; ++n) {
    const RationalTransfer hh = transfer_h_hat(n);
    failures += !(sigma_sq(n) == spectral_inner_product(hh, hh));
  }
  failures += !(sigma_sq(0) == BigRational(1));
  failures += !(sigma_sq(1) == BigRational(1, 12));
  failures += !(sigma_sq(2) == BigRational(1, 720));
  return {failures == 0, std::to_string(failures) + " mismatches for n <= 8"};
}

Outcome normalizing_constant() {
  double worst = 0.0;
  for (unsigned n = 0; n <= kNormalizingMaxOrder; ++n) {
    long double log_product = 0.0L;
    for (unsigned k = 0; k <= n; ++k)
      log_product -= 0.5L * std::log(2.0L * std::acos(-1.0L) * sigma_sq(k).to_long_double());
    const double rel = std::abs(std::expm1(static_cast<double>(std::log(static_cast<long double>(normalizing_k(n))) -
                                                               log_product)));
    worst = std::max(worst, rel);
  }
  return {worst < kNormalizingRelTol, "max relative error " + fmt(worst) + " (bound 1e-12)"};
}

Outcome density_consistency() {
  double route = 0.0;
  double symmetry = 0.0;
  const std::size_t per_order = kDensityProbes / (kDensityMaxOrder + 1);
  std::size_t total = 0;
  for (unsigned n = 0; n <= kDensityMaxOrder; ++n) {
    for (const auto& p : random_transition_probes(n, per_order, kSeed + n)) {
      const double factored = log_transition_density(p.w, p.a, p.t);
      route = std::max(route, std::abs(std::expm1(factored - log_transition_density_renewal(p.w, p.a, p.t))));
      symmetry = std::max(symmetry, std::abs(std::expm1(factored - log_transition_density(p.a.star(), p.w.star(), p.t))));
      ++total;
    }
  }
  return {route < kRouteRelTol && symmetry < kSymmetryRelTol,
          std::to_string(total) + " probes: factored vs renewal " + fmt(route) + " (bound 1e-8), symmetry " +
              fmt(symmetry) + " (bound 1e-9)"};
}

Outcome precision_factorization() {
  double worst = 0.0;
  std::string where;
  for (unsigned n = 0; n <= kPrecisionMaxOrder; ++n) {
    for (double t : {0.5, 1.0, 2.0}) {
      const Eigen::MatrixXd prod = r_inverse(n, t) * covariance_r(n, t);
      for (unsigned j = 0; j <= n; ++j) {
        for (unsigned k = 0; k <= n; ++k) {
          if (j == k) continue;
          if (std::abs(prod(j, k)) > worst) {
            worst = std::abs(prod(j, k));
            where = "n=" + std::to_string(n) + " t=" + fmt(t);
          }
        }
      }
    }
  }
  return {worst < kPrecisionOffDiagTol, "max off-diagonal " + fmt(worst) + " at " + where + " (bound 1e-6)"};
}

Outcome fourier_pair() {
  double worst = 0.0;
  for (unsigned n = 0; n <= kFourierMaxOrder; ++n)
    for (double t : {0.25, 1.0, 4.0})
      worst = std::max(worst, std::abs(verify::fourier_inversion_h(n, t) - impulse_response(n, t)));
  return {worst < kFourierTol, "max |inversion - h_n| " + fmt(worst) + " (bound 1e-8)"};
}

Outcome laplace_functional() {
  const std::vector<double> thetas{0.5, 1.0, 2.0};
  const auto start = std::chrono::steady_clock::now();
  const auto estimates = mc_quadratic_laplace(thetas, kPaths, kGrid, kSeed);
  const double elapsed = seconds_since(start);
  bool ok = elapsed < kMcSeconds;
  std::ostringstream detail;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double r = std::sqrt(thetas[i] / 2.0);
    const double closed = std::sqrt(2.0 / (std::cosh(r) * std::cosh(r) + std::cos(r) * std::cos(r)));
    ok = ok && std::abs(closed - laplace_functional_closed_form(thetas[i])) < 1e-15;
    const double bound = kBand * estimates[i].std_error + 2.0 / static_cast<double>(kGrid);
    const double dev = std::abs(estimates[i].mean - closed);
    ok = ok && dev < bound;
    detail << "theta=" << fmt(thetas[i]) << " |mc-exact| " << fmt(dev) << " < " << fmt(bound) << "; ";
  }
  detail << fmt(elapsed) << " s (limit 120 s)";
  return {ok, detail.str()};
}

Outcome sampler_laws() {
  double worst_w = 0.0;
  const auto paths = sample_w_paths(kSamplerMaxOrder, std::vector<double>{1.0}, kSeed, kPaths);
  const Eigen::MatrixXd r = covariance_r(kSamplerMaxOrder, 1.0);
  const double count = static_cast<double>(paths.size());
  for (unsigned j = 0; j <= kSamplerMaxOrder; ++j) {
    for (unsigned k = j; k <= kSamplerMaxOrder; ++k) {
      double s1 = 0.0, s2 = 0.0;
      for (const auto& p : paths) {
        const double v = p.states[0][j] * p.states[0][k];
        s1 += v;
        s2 += v * v;
      }
      const double mean = s1 / count;
      const double se = std::sqrt((s2 / count - mean * mean) / count);
      worst_w = std::max(worst_w, std::abs(mean - r(j, k)) / se);
    }
  }
  double worst_x = 0.0;
  for (double tau : {0.5, 1.0, 2.0}) {
    const auto xs = sample_x_paths(0, std::vector<double>{0.0, tau}, kSeed, kPaths);
    double s1 = 0.0, s2 = 0.0;
    for (const auto& p : xs) {
      const double v = p.states[0][0] * p.states[1][0];
      s1 += v;
      s2 += v * v;
    }
    const double mean = s1 / count;
    const double se = std::sqrt((s2 / count - mean * mean) / count);
    worst_x = std::max(worst_x, std::abs(mean - std::exp(-tau / 2.0)) / se);
  }
  return {worst_w < kBand && worst_x < kBand,
          "max |z| W(1) covariance " + fmt(worst_w) + ", X_0 lag covariance " + fmt(worst_x) + " (band 3)"};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Runs the tool twice with the same arguments and compares stdout byte for byte.
bool tool_repeatable(const std::string& args, const std::filesystem::path& dir, int index) {
  std::string outputs[2];
  for (int run = 0; run < 2; ++run) {
    const auto file = dir / ("run" + std::to_string(index) + "_" + std::to_string(run));
    const std::string command = std::string("\"") + INTBM_TOOL_PATH + "\" " + args + " > \"" + file.string() + "\"";
    const int status = std::system(command.c_str());
    if (status != 0) return false;
    outputs[run] = read_file(file);
  }
  return !outputs[0].empty() && outputs[0] == outputs[1];
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "intbm_acceptance_determinism";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::vector<std::string> commands{
      "sample --n 3 --t-max 10 --count 200 --seed 42",
      "sample --n 2 --times -1,0,0.5,3 --seed 42 --kind x --path-index 17 --format json",
      "correlate --n 3 --tau-max 4",
      "matrices --n 6 --which rho",
      "density --n 2 --t 1.5 --w 0.3,-0.2,0.1 --a 0.1,0.2,0.3",
      "verify --suite mc --seed 42 --paths 4000 --grid 256",
  };
  std::size_t failures = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) failures += !tool_repeatable(commands[i], dir, static_cast<int>(i));

  const auto a = mc_quadratic_laplace(1.0, 5000, 256, kSeed);
  const auto b = mc_quadratic_laplace(1.0, 5000, 256, kSeed);
  failures += estimate_to_json(a) != estimate_to_json(b);
  std::filesystem::remove_all(dir);
  return {failures == 0, std::to_string(commands.size() + 1) + " outputs repeated, " + std::to_string(failures) +
                             " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "exact identity suite", exact_identities},
      {2, "reference rho matrices", rho_reference},
      {3, "spectral orthogonality", spectral_orthogonality},
      {4, "innovation variance closed form", innovation_variance},
      {5, "normalizing constant", normalizing_constant},
      {6, "transition density consistency", density_consistency},
      {7, "precision factorization", precision_factorization},
      {8, "Fourier pair", fourier_pair},
      {9, "Monte Carlo Laplace functional", laplace_functional},
      {10, "sampler laws", sampler_laws},
      {11, "determinism", determinism},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && outcome.pass;
    std::cout << "criterion " << c.id << ": " << (outcome.pass ? "PASS" : "FAIL") << "  " << c.name << "  ("
              << outcome.detail << ")" << std::endl;
  }
  return all_pass ? 0 : 1;
}
