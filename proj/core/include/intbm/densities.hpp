#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace intbm {

/// Largest order n handled in floating point. Beyond this the unit-time
/// precision entries exceed the range where double evaluation is meaningful.
inline constexpr unsigned kMaxFloatOrder = 20;

/// w = (W_0, ..., W_n) or x = (X_0, ..., X_n): component k belongs to the
/// k-fold integrated process.
class StateVector {
 public:
  /// Throws std::invalid_argument when empty or when any entry is not finite.
  explicit StateVector(std::vector<double> values);
  StateVector(std::initializer_list<double> values) : StateVector(std::vector<double>(values)) {}
  static StateVector zero(unsigned order) { return StateVector(std::vector<double>(order + 1, 0.0)); }

  unsigned order() const { return static_cast<unsigned>(values_.size() - 1); }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const { return values_; }
  Eigen::VectorXd to_eigen() const;

  /// Sign flip of the odd components.
  StateVector star() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<double> values_;
};

/// Diagonal T(t) with entries t^{-(k+1/2)}, k = 0..order.
class TimeScaling {
 public:
  /// Throws std::domain_error unless t is finite and positive.
  TimeScaling(double t, unsigned order);

  double t() const { return t_; }
  unsigned order() const { return order_; }
  double entry(unsigned k) const;
  Eigen::VectorXd diagonal() const;
  Eigen::VectorXd inverse_diagonal() const;

 private:
  double t_;
  unsigned order_;
};

/// R(t)_{jk} = t^{j+k+1} / (j! k! (j+k+1)), the covariance of W(t).
Eigen::MatrixXd covariance_r(unsigned n, double t);

/// R(t)^{-1} = T(t) A' Lambda A T(t), with A' Lambda A formed exactly before rounding.
Eigen::MatrixXd r_inverse(unsigned n, double t);

/// log |R(t)| = (n+1)^2 log t - sum_k log(A_kk^2 (2k+1)).
double log_det_covariance_r(unsigned n, double t);

/// Lower-triangular L with L L' = R(1): L = A^{-1} Lambda^{-1/2}.
Eigen::MatrixXd unit_time_cholesky(unsigned n);

/// Renewal drift matrix T(t)^{-1} Gamma T(t); entry (k, i) = t^{k-i}/(k-i)!.
Eigen::MatrixXd drift_matrix(unsigned n, double t);

/// mu_k(a, t) = sum_{i <= k} t^{k-i}/(k-i)! a_i. Accepts t >= 0.
StateVector mean_mu(const StateVector& a, double t);

/// Prefactor of the stationary density of (X_0(t), ..., X_n(t)).
double log_normalizing_k(unsigned n);
double normalizing_k(unsigned n);

/// Stationary joint density of (X_0, ..., X_n): K_n exp(-(Ax)' Lambda (Ax) / 2).
double log_stationary_density(const StateVector& x);
double stationary_density(const StateVector& x);

/// Density of X_n given X_0..X_{n-1} = prefix. An empty prefix gives the N(0,1) law of X_0.
double log_conditional_density(double x_n, std::span<const double> prefix);
double conditional_density(double x_n, std::span<const double> prefix);

/// Density of W(t) = w, from the stationary density at xi_k = t^{-(k+1/2)} w_k.
double log_density_w(const StateVector& w, double t);
double density_w(const StateVector& w, double t);

/// Density of W(s+t) = w given W(s) = a, in factored form with A and A*.
double log_transition_density(const StateVector& w, const StateVector& a, double t);
double transition_density(const StateVector& w, const StateVector& a, double t);

/// Same kernel through the renewal route: density of W(t) at w - mu(a, t).
double log_transition_density_renewal(const StateVector& w, const StateVector& a, double t);

}  // namespace intbm
