#include "intbm/densities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "intbm/exact_core.hpp"

namespace intbm {
namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

long double log_of(const mpz_class& z) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(static_cast<long double>(std::abs(mantissa))) +
         static_cast<long double>(exponent) * std::numbers::ln2_v<long double>;
}

long double log_of(const BigRational& q) { return log_of(q.numerator()) - log_of(q.denominator()); }

// Exact quantities rounded once, shared read-only after first use.
struct FloatTables {
  MatrixXld a;
  MatrixXld a_star;
  Eigen::MatrixXd unit_cholesky;
  std::vector<Eigen::MatrixXd> unit_precision;  // A' Lambda A at each order
  std::vector<long double> log_k;
  std::vector<double> log_det_unit;
  std::vector<double> factorial;
};

FloatTables build_tables() {
  constexpr unsigned top = kMaxFloatOrder;
  FloatTables out;
  const ExactMatrix a = a_matrix(top);
  out.a = a.to_long_double();
  out.a_star = star(a).to_long_double();

  ExactMatrix chol = a_inverse_matrix(top);
  Eigen::MatrixXd chol_d = chol.to_double();
  for (unsigned k = 0; k <= top; ++k) chol_d.col(k) /= std::sqrt(2.0 * k + 1.0);
  out.unit_cholesky = chol_d;

  BigRational k_squared_scaled(1);  // K_n^2 (2 pi)^{n+1}
  BigRational central(1);           // prod (2m)!/m!
  double log_det = 0.0;
  for (unsigned n = 0; n <= top; ++n) {
    out.unit_precision.push_back(unit_time_precision(n).to_double());
    central *= BigRational(factorial(2 * n), factorial(n));
    const BigRational odd_product(factorial(2 * n + 1), mpz_class(mpz_class(1) << n) * factorial(n));
    k_squared_scaled = odd_product * central * central;
    out.log_k.push_back(0.5L * log_of(k_squared_scaled) -
                        0.5L * static_cast<long double>(n + 1) * std::log(2.0L * std::numbers::pi_v<long double>));
    const long double diag = log_of(BigRational(factorial(2 * n), factorial(n)));
    log_det -= static_cast<double>(2.0L * diag + std::log(2.0L * n + 1.0L));
    out.log_det_unit.push_back(log_det);
    out.factorial.push_back(factorial(n).get_d());
  }
  return out;
}

const FloatTables& tables() {
  static const FloatTables instance = build_tables();
  return instance;
}

void require_order(unsigned n) {
  if (n > kMaxFloatOrder)
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds the floating-point limit " +
                                std::to_string(kMaxFloatOrder));
}

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("time must be finite and positive");
}

void require_same_order(const StateVector& a, const StateVector& b) {
  if (a.order() != b.order()) throw std::invalid_argument("state vectors have different orders");
}

// sum_k (2k+1) (sum_{j<=k} A_kj x_j)^2
long double stationary_quadratic(std::span<const long double> x) {
  const MatrixXld& a = tables().a;
  long double q = 0.0L;
  for (std::size_t k = 0; k < x.size(); ++k) {
    long double row = 0.0L;
    for (std::size_t j = 0; j <= k; ++j) row += a(k, j) * x[j];
    q += static_cast<long double>(2 * k + 1) * row * row;
  }
  return q;
}

std::vector<long double> scaled(std::span<const double> w, double t) {
  std::vector<long double> out(w.size());
  const long double lt = std::log(static_cast<long double>(t));
  for (std::size_t k = 0; k < w.size(); ++k)
    out[k] = static_cast<long double>(w[k]) * std::exp(-(static_cast<long double>(k) + 0.5L) * lt);
  return out;
}

double time_jacobian_log(unsigned n, double t) {
  const double dim = static_cast<double>(n + 1);
  return -0.5 * dim * dim * std::log(t);
}

}  // namespace

StateVector::StateVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("StateVector: needs at least one component");
  require_order(order());
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("StateVector: non-finite component");
}

Eigen::VectorXd StateVector::to_eigen() const {
  return Eigen::Map<const Eigen::VectorXd>(values_.data(), static_cast<Eigen::Index>(values_.size()));
}

StateVector StateVector::star() const {
  std::vector<double> out = values_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return StateVector(std::move(out));
}

TimeScaling::TimeScaling(double t, unsigned order) : t_(t), order_(order) {
  require_positive_time(t);
  require_order(order);
}

double TimeScaling::entry(unsigned k) const { return std::pow(t_, -(static_cast<double>(k) + 0.5)); }

Eigen::VectorXd TimeScaling::diagonal() const {
  Eigen::VectorXd out(order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) out(k) = entry(k);
  return out;
}

Eigen::VectorXd TimeScaling::inverse_diagonal() const {
  Eigen::VectorXd out(order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) out(k) = std::pow(t_, static_cast<double>(k) + 0.5);
  return out;
}

Eigen::MatrixXd covariance_r(unsigned n, double t) {
  require_order(n);
  require_positive_time(t);
  const auto& fact = tables().factorial;
  Eigen::MatrixXd out(n + 1, n + 1);
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = 0; k <= n; ++k)
      out(j, k) = std::pow(t, static_cast<double>(j + k + 1)) / (fact[j] * fact[k] * (j + k + 1));
  return out;
}

Eigen::MatrixXd r_inverse(unsigned n, double t) {
  require_order(n);
  require_positive_time(t);
  Eigen::MatrixXd out = tables().unit_precision[n];
  // T(t)_jj T(t)_kk = t^{-(j+k+1)}; an integer power avoids rounding sqrt(t).
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = 0; k <= n; ++k) out(j, k) *= std::pow(t, -static_cast<double>(j + k + 1));
  return out;
}

double log_det_covariance_r(unsigned n, double t) {
  require_order(n);
  require_positive_time(t);
  const double dim = static_cast<double>(n + 1);
  return dim * dim * std::log(t) + tables().log_det_unit[n];
}

Eigen::MatrixXd unit_time_cholesky(unsigned n) {
  require_order(n);
  return tables().unit_cholesky.topLeftCorner(n + 1, n + 1);
}

Eigen::MatrixXd drift_matrix(unsigned n, double t) {
  require_order(n);
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("time must be finite and non-negative");
  const auto& fact = tables().factorial;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (unsigned k = 0; k <= n; ++k)
    for (unsigned i = 0; i <= k; ++i) out(k, i) = std::pow(t, static_cast<double>(k - i)) / fact[k - i];
  return out;
}

StateVector mean_mu(const StateVector& a, double t) {
  const unsigned n = a.order();
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("time must be finite and non-negative");
  const auto& fact = tables().factorial;
  std::vector<double> out(n + 1, 0.0);
  for (unsigned k = 0; k <= n; ++k) {
    double sum = 0.0;
    for (unsigned i = 0; i <= k; ++i) sum += std::pow(t, static_cast<double>(k - i)) / fact[k - i] * a[i];
    out[k] = sum;
  }
  return StateVector(std::move(out));
}

double log_normalizing_k(unsigned n) {
  require_order(n);
  return static_cast<double>(tables().log_k[n]);
}

double normalizing_k(unsigned n) { return std::exp(log_normalizing_k(n)); }

double log_stationary_density(const StateVector& x) {
  std::vector<long double> xl(x.values().begin(), x.values().end());
  return static_cast<double>(tables().log_k[x.order()] - 0.5L * stationary_quadratic(xl));
}

double stationary_density(const StateVector& x) { return std::exp(log_stationary_density(x)); }

double log_conditional_density(double x_n, std::span<const double> prefix) {
  const auto n = static_cast<unsigned>(prefix.size());
  require_order(n);
  if (!std::isfinite(x_n)) throw std::invalid_argument("conditional_density: non-finite x_n");
  const MatrixXld& a = tables().a;
  long double row = a(n, n) * static_cast<long double>(x_n);
  for (unsigned k = 0; k < n; ++k) row += a(n, k) * static_cast<long double>(prefix[k]);
  const long double two_n_plus_one = 2.0L * n + 1.0L;
  // sigma_n^2 = (n!/(2n)!)^2 / (2n+1)
  const long double log_sigma_sq =
      2.0L * (std::lgamma(static_cast<long double>(n) + 1.0L) - std::lgamma(2.0L * n + 1.0L)) -
      std::log(two_n_plus_one);
  const long double log_two_pi = std::log(2.0L * std::numbers::pi_v<long double>);
  return static_cast<double>(-0.5L * (log_two_pi + log_sigma_sq) - 0.5L * two_n_plus_one * row * row);
}

double conditional_density(double x_n, std::span<const double> prefix) {
  return std::exp(log_conditional_density(x_n, prefix));
}

double log_density_w(const StateVector& w, double t) {
  require_positive_time(t);
  const unsigned n = w.order();
  const auto xi = scaled(w.values(), t);
  return time_jacobian_log(n, t) + static_cast<double>(tables().log_k[n] - 0.5L * stationary_quadratic(xi));
}

double density_w(const StateVector& w, double t) { return std::exp(log_density_w(w, t)); }

double log_transition_density(const StateVector& w, const StateVector& a, double t) {
  require_positive_time(t);
  require_same_order(w, a);
  const unsigned n = w.order();
  const auto& tab = tables();
  const auto tw = scaled(w.values(), t);
  const auto ta = scaled(a.values(), t);
  long double q = 0.0L;
  for (unsigned k = 0; k <= n; ++k) {
    long double row = 0.0L;
    for (unsigned j = 0; j <= k; ++j) row += tab.a(k, j) * tw[j] - tab.a_star(k, j) * ta[j];
    q += static_cast<long double>(2 * k + 1) * row * row;
  }
  return time_jacobian_log(n, t) + static_cast<double>(tab.log_k[n] - 0.5L * q);
}

double transition_density(const StateVector& w, const StateVector& a, double t) {
  return std::exp(log_transition_density(w, a, t));
}

double log_transition_density_renewal(const StateVector& w, const StateVector& a, double t) {
  require_positive_time(t);
  require_same_order(w, a);
  const unsigned n = w.order();
  const auto& fact = tables().factorial;
  std::vector<long double> xi(n + 1);
  const long double lt = std::log(static_cast<long double>(t));
  for (unsigned k = 0; k <= n; ++k) {
    long double drift = 0.0L;
    for (unsigned i = 0; i <= k; ++i)
      drift += std::pow(static_cast<long double>(t), static_cast<long double>(k - i)) / fact[k - i] * a[i];
    xi[k] = (static_cast<long double>(w[k]) - drift) * std::exp(-(static_cast<long double>(k) + 0.5L) * lt);
  }
  return time_jacobian_log(n, t) + static_cast<double>(tables().log_k[n] - 0.5L * stationary_quadratic(xi));
}

}  // namespace intbm
