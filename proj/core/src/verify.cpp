#include "intbm/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <json.hpp>

#include "intbm/densities.hpp"
#include "intbm/exact_core.hpp"
#include "intbm/sampling.hpp"
#include "intbm/serialization.hpp"
#include "intbm/spectral.hpp"

namespace intbm::verify {
namespace {

CheckResult count_check(std::string name, std::size_t failures, std::string detail) {
  return CheckResult{std::move(name), static_cast<double>(failures), 0.0, failures == 0, std::move(detail)};
}

CheckResult bound_check(std::string name, double statistic, double bound, std::string detail) {
  return CheckResult{std::move(name), statistic, bound, statistic <= bound, std::move(detail)};
}

ExactMatrix from_rows(std::initializer_list<std::initializer_list<BigRational>> rows) {
  ExactMatrix out(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

// Mean of the products x_i * y_i with its standard error.
struct ProductMoment {
  double mean;
  double std_error;
};

ProductMoment product_moment(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> products(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) products[i] = x[i] * y[i];
  const MCEstimate e = summarize(products, 0, 0);
  return {e.mean, e.std_error};
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "exact") return Suite::exact;
  if (name == "spectral") return Suite::spectral;
  if (name == "density") return Suite::density;
  if (name == "mc") return Suite::mc;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "' (exact, spectral, density, mc, all)");
}

CheckResult exact_identities(std::size_t max_dim) {
  std::size_t failures = 0;
  std::string first_failure;
  for (const auto& check : check_matrix_identities(max_dim)) {
    if (!check.holds) {
      if (failures == 0) first_failure = "; first failure: " + check.name + " at N=" + std::to_string(check.dim);
      ++failures;
    }
  }
  return count_check("exact_identities", failures,
                     "A*Gamma=B, Gamma*Gamma^*=I, A=B^*, A*A^-1=A^-1*A=I for N=0.." + std::to_string(max_dim) + first_failure);
}

CheckResult rho_reference_values() {
  const BigRational h(1, 2);
  const BigRational third(1, 3);
  std::size_t failures = 0;
  std::string detail;
  auto expect = [&](const std::string& what, const ExactMatrix& got, const ExactMatrix& want) {
    if (got != want) {
      ++failures;
      detail += what + " mismatch; ";
    }
  };
  expect("rho_inv(1)", rho_inverse_matrix(1), from_rows({{1, h}, {h, third}}));
  expect("rho(1)", rho_matrix(1), from_rows({{4, -6}, {-6, 12}}));
  // The (2,0) entry is 30: the closed-form sum and exact inversion both give a symmetric matrix.
  const ExactMatrix rho2 = from_rows({{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}});
  expect("rho(2)", rho_matrix(2), rho2);
  expect("inverse(rho_inv(2))", rho_inverse_matrix(2).inverse(), rho2);
  expect("rho_factored(2)", rho_matrix_factored(2), rho2);
  expect("rho(2)*rho_inv(2)", rho2 * rho_inverse_matrix(2), ExactMatrix::identity(3));
  return count_check("rho_reference_values", failures, detail.empty() ? "N=1 and N=2 exact" : detail);
}

CheckResult spectral_orthogonality(unsigned max_order) {
  std::size_t failures = 0;
  for (unsigned j = 0; j <= max_order; ++j) {
    for (unsigned k = 0; k <= max_order; ++k) {
      const BigRational want = j == k ? BigRational(1, 2 * static_cast<std::int64_t>(k) + 1) : BigRational(0);
      if (spectral_inner_product(transfer_g(j), transfer_g(k)) != want) ++failures;
    }
  }
  for (unsigned n = 1; n <= max_order; ++n)
    for (unsigned m = 0; m < n; ++m)
      if (!spectral_inner_product(transfer_h_hat(n), transfer_h(m)).is_zero()) ++failures;
  return count_check("spectral_orthogonality", failures,
                     "<G_j,G_k> = delta_jk/(2k+1) and <Hhat_n,H_m> = 0 (m<n), orders <= " +
                         std::to_string(max_order));
}

CheckResult innovation_variance(unsigned max_order) {
  std::size_t failures = 0;
  for (unsigned n = 0; n <= max_order; ++n)
    if (sigma_sq(n) != spectral_inner_product(transfer_h_hat(n), transfer_h_hat(n))) ++failures;
  if (sigma_sq(0) != BigRational(1)) ++failures;
  if (sigma_sq(1) != BigRational(1, 12)) ++failures;
  if (sigma_sq(2) != BigRational(1, 720)) ++failures;
  return count_check("innovation_variance", failures,
                     "closed form equals <Hhat_n,Hhat_n> for n <= " + std::to_string(max_order) +
                         "; sigma_0^2=1, sigma_1^2=1/12, sigma_2^2=1/720");
}

CheckResult normalizing_constant(unsigned max_order) {
  double worst = 0.0;
  for (unsigned n = 0; n <= max_order; ++n) {
    double product = 1.0;
    for (unsigned k = 0; k <= n; ++k) product /= std::sqrt(2.0 * std::numbers::pi * sigma_sq(k).to_double());
    worst = std::max(worst, std::abs(normalizing_k(n) / product - 1.0));
  }
  return bound_check("normalizing_constant", worst, 1e-12,
                     "relative error of closed-form K_n against prod (2 pi sigma_k^2)^(-1/2), n <= " +
                         std::to_string(max_order));
}

std::vector<CheckResult> transition_density_routes(std::uint64_t seed, std::size_t probes) {
  double worst_routes = 0.0;
  double worst_symmetry = 0.0;
  constexpr unsigned kOrders = 5;
  for (unsigned n = 0; n < kOrders; ++n) {
    const std::size_t count = probes / kOrders + (n < probes % kOrders ? 1 : 0);
    for (const auto& p : random_transition_probes(n, count, seed + n)) {
      const double factored = log_transition_density(p.w, p.a, p.t);
      const double renewal = log_transition_density_renewal(p.w, p.a, p.t);
      const double swapped = log_transition_density(p.a.star(), p.w.star(), p.t);
      worst_routes = std::max(worst_routes, std::abs(std::expm1(factored - renewal)));
      worst_symmetry = std::max(worst_symmetry, std::abs(std::expm1(factored - swapped)));
    }
  }
  const std::string where = std::to_string(probes) + " probes, n <= 4, t and a_k in [0.1, 10]";
  return {bound_check("transition_two_routes", worst_routes, 1e-8,
                      "relative error, factored kernel vs density of W(t) at w - mu(a,t); " + where),
          bound_check("transition_symmetry", worst_symmetry, 1e-9,
                      "relative error, pi_a(w,t) vs pi_{w*}(a*,t); " + where)};
}

CheckResult precision_factorization() {
  double worst = 0.0;
  std::ostringstream detail;
  detail << "max |off-diagonal| of r_inverse(n,t)*covariance_r(n,t) over n <= 6, t in {0.5,1,2}:";
  for (unsigned n = 0; n <= 6; ++n) {
    for (double t : {0.5, 1.0, 2.0}) {
      const Eigen::MatrixXd product = r_inverse(n, t) * covariance_r(n, t);
      double off = 0.0;
      for (unsigned j = 0; j <= n; ++j)
        for (unsigned k = 0; k <= n; ++k)
          if (j != k) off = std::max(off, std::abs(product(j, k)));
      worst = std::max(worst, off);
      if (off > 1e-6) detail << " n=" << n << ",t=" << t << ": " << off << ";";
    }
  }
  return bound_check("precision_factorization", worst, 1e-6, detail.str());
}

double fourier_inversion_h(unsigned n, double t) {
  if (!(t > 0.0)) throw std::domain_error("fourier_inversion_h: t must be positive");
  using Quadrature = boost::math::quadrature::gauss<double, 32>;
  const RationalTransfer h = transfer_h(n);
  // H(-v) = conj(H(v)), so the integral over R is twice the real part over [0, inf).
  auto integrand = [&](double v) { return std::real(h(v) * std::polar(1.0, v * t)) / std::numbers::pi; };
  constexpr int kHalfPeriods = 64;
  constexpr int kPanels = 8;
  constexpr int kFirstAveraged = 32;
  const double half_period = std::numbers::pi / t;
  std::vector<double> partial;
  double sum = 0.0;
  for (int k = 0; k < kHalfPeriods; ++k) {
    for (int q = 0; q < kPanels; ++q) {
      const double a = (k + static_cast<double>(q) / kPanels) * half_period;
      sum += Quadrature::integrate(integrand, a, a + half_period / kPanels);
    }
    if (k >= kFirstAveraged) partial.push_back(sum);
  }
  while (partial.size() > 1) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    partial.pop_back();
  }
  return partial.front();
}

CheckResult fourier_pair() {
  double worst = 0.0;
  for (unsigned n = 0; n <= 4; ++n)
    for (double t : {0.25, 1.0, 4.0}) worst = std::max(worst, std::abs(fourier_inversion_h(n, t) - impulse_response(n, t)));
  return bound_check("fourier_pair", worst, 1e-8,
                     "max |h_n(t) - numeric inverse transform of H_n| for n <= 4, t in {0.25,1,4}");
}

std::vector<CheckResult> laplace_functional(const Options& options) {
  std::vector<CheckResult> out;
  const auto estimates = mc_quadratic_laplace(options.thetas, options.paths, options.grid, options.seed);
  for (std::size_t i = 0; i < options.thetas.size(); ++i) {
    const double theta = options.thetas[i];
    const MCEstimate& e = estimates[i];
    const double exact = laplace_functional_closed_form(theta);
    const double bound = 3.0 * e.std_error + 2.0 / static_cast<double>(options.grid);
    std::ostringstream name;
    name << "laplace_functional_theta_" << theta;
    std::ostringstream detail;
    detail.precision(10);
    detail << "estimate " << e.mean << " +- " << e.std_error << " vs closed form " << exact << " (" << e.n_paths
           << " paths, grid " << e.grid_size << ", seed " << e.seed << ")";
    out.push_back(bound_check(name.str(), std::abs(e.mean - exact), bound, detail.str()));
  }
  return out;
}

std::vector<CheckResult> sampler_laws(const Options& options) {
  std::vector<CheckResult> out;
  const std::vector<double> unit_time{1.0};
  for (unsigned n = 0; n <= 3; ++n) {
    const auto paths = sample_w_paths(n, unit_time, options.seed, options.paths);
    std::vector<std::vector<double>> columns(n + 1, std::vector<double>(paths.size()));
    for (std::size_t p = 0; p < paths.size(); ++p)
      for (unsigned k = 0; k <= n; ++k) columns[k][p] = paths[p].states[0][k];
    const Eigen::MatrixXd r = covariance_r(n, 1.0);
    double worst_z = 0.0;
    for (unsigned j = 0; j <= n; ++j) {
      for (unsigned k = j; k <= n; ++k) {
        const ProductMoment m = product_moment(columns[j], columns[k]);
        worst_z = std::max(worst_z, std::abs(m.mean - r(j, k)) / m.std_error);
      }
    }
    out.push_back(bound_check("w_covariance_n" + std::to_string(n), worst_z, 3.0,
                              "max |z| of empirical E W_j(1) W_k(1) against R(1), " + std::to_string(options.paths) +
                                  " paths"));
  }
  for (double tau : {0.5, 1.0, 2.0}) {
    const std::vector<double> times{0.0, tau};
    const auto paths = sample_x_paths(0, times, options.seed, options.paths);
    std::vector<double> x0(paths.size());
    std::vector<double> x1(paths.size());
    for (std::size_t p = 0; p < paths.size(); ++p) {
      x0[p] = paths[p].states[0][0];
      x1[p] = paths[p].states[1][0];
    }
    const ProductMoment m = product_moment(x0, x1);
    std::ostringstream name;
    name << "x0_autocovariance_tau_" << tau;
    std::ostringstream detail;
    detail << "empirical " << m.mean << " vs exp(-tau/2) = " << std::exp(-0.5 * tau) << ", z-score";
    out.push_back(bound_check(name.str(), std::abs(m.mean - std::exp(-0.5 * tau)) / m.std_error, 3.0, detail.str()));
  }
  return out;
}

CheckResult determinism(std::uint64_t seed) {
  auto render = [seed] {
    std::ostringstream os;
    const std::vector<double> times{0.5, 1.0, 2.0, 4.0};
    write_path_csv(os, sample_w(3, times, seed, 7), 'w');
    const std::vector<double> x_times{-1.0, 0.0, 1.5};
    write_path_csv(os, sample_x(2, x_times, seed, 3), 'x');
    os << matrix_to_json(rho_matrix(4), "rho") << '\n';
    os << estimate_to_json(mc_quadratic_laplace(1.0, 2000, 128, seed)) << '\n';
    return os.str();
  };
  const std::string first = render();
  const std::string second = render();
  std::size_t mismatch = first == second ? 0 : 1;
  return count_check("determinism", mismatch,
                     "CSV/JSON renderings of paths, matrices and an MC estimate compared byte for byte (" +
                         std::to_string(first.size()) + " bytes)");
}

std::vector<CheckResult> run_suite(Suite suite, const Options& options) {
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = suite == Suite::all;
  if (all || suite == Suite::exact) {
    out.push_back(exact_identities());
    out.push_back(rho_reference_values());
  }
  if (all || suite == Suite::spectral) {
    out.push_back(spectral_orthogonality());
    out.push_back(innovation_variance());
    out.push_back(fourier_pair());
  }
  if (all || suite == Suite::density) {
    out.push_back(normalizing_constant());
    append(transition_density_routes(options.seed));
    out.push_back(precision_factorization());
  }
  if (all || suite == Suite::mc) {
    append(laplace_functional(options));
    append(sampler_laws(options));
  }
  if (all) out.push_back(determinism(options.seed));
  return out;
}

std::string report_to_json(const std::vector<CheckResult>& results) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : results)
    doc.push_back({{"test", r.test}, {"statistic", r.statistic}, {"bound", r.bound}, {"pass", r.pass}, {"detail", r.detail}});
  return doc.dump(2);
}

}  // namespace intbm::verify
