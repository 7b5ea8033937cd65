#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "intbm/densities.hpp"
#include "intbm/philox.hpp"

namespace intbm {

/// One realization of (W_0, ..., W_n) or (X_0, ..., X_n) at the listed times.
struct PathSample {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  unsigned order() const { return states.empty() ? 0 : states.front().order(); }
  friend bool operator==(const PathSample&, const PathSample&) = default;
};

/// Exact one-step transition of W over a fixed lag dt:
///   W(s + dt) = Drift(dt) W(s) + T(dt)^{-1} L z,   z ~ N(0, I),
/// with L L' = R(1) the closed-form lower-triangular factor.
class RenewalStep {
 public:
  RenewalStep(unsigned order, double dt);

  unsigned order() const { return order_; }
  double dt() const { return dt_; }
  /// Replaces state (length order+1) with a draw of the state dt later.
  void advance(std::span<double> state, RandomStream& rng) const;

 private:
  unsigned order_;
  double dt_;
  std::vector<double> drift_;   // row-major lower triangle, (order+1)^2
  std::vector<double> noise_;   // row-major lower triangle, (order+1)^2
};

/// Samples W at strictly increasing positive times from stream (seed, stream).
/// Throws std::invalid_argument for empty, non-increasing, or non-positive times.
PathSample sample_w(unsigned n, std::span<const double> times, std::uint64_t seed, std::uint64_t stream = 0);

/// Samples the stationary process X_k(t) = e^{-(k+1/2)t} W_k(e^t) at strictly increasing times.
/// The rate k+1/2 matches the filter poles; with any other rate Var X_k(t) drifts in t.
PathSample sample_x(unsigned n, std::span<const double> times, std::uint64_t seed, std::uint64_t stream = 0);

/// Streams 0 .. n_paths-1 of sample_w, evaluated in parallel.
std::vector<PathSample> sample_w_paths(unsigned n, std::span<const double> times, std::uint64_t seed,
                                       std::size_t n_paths);
std::vector<PathSample> sample_x_paths(unsigned n, std::span<const double> times, std::uint64_t seed,
                                       std::size_t n_paths);

/// Calls body(path_index) for every index in [0, count) across worker threads.
/// The body must only write to per-index storage.
void parallel_for_paths(std::size_t count, const std::function<void(std::size_t)>& body);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double value);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_paths = 0;
  std::size_t grid_size = 0;
  std::uint64_t seed = 0;
};

/// Sample mean and mean standard error, summed in index order.
MCEstimate summarize(std::span<const double> values, std::size_t grid_size, std::uint64_t seed);

/// Closed form of E exp(-(theta^2/2) \int_0^1 W_1(t)^2 dt):
///   (2 / (cosh^2 sqrt(theta/2) + cos^2 sqrt(theta/2)))^{1/2}.
double laplace_functional_closed_form(double theta);

/// Monte Carlo estimate of the same functional: (W_0, W_1) sampled exactly on a
/// uniform grid of [0, 1], the integral by the trapezoid rule.
MCEstimate mc_quadratic_laplace(double theta, std::size_t n_paths, std::size_t grid_size, std::uint64_t seed);

/// One estimate per theta from a single set of paths; entry i equals
/// mc_quadratic_laplace(thetas[i], n_paths, grid_size, seed) exactly.
std::vector<MCEstimate> mc_quadratic_laplace(std::span<const double> thetas, std::size_t n_paths,
                                             std::size_t grid_size, std::uint64_t seed);

/// A random (a, w, t) triple for the transition kernel: t ~ U[0.1, 10],
/// a_k ~ U[0.1, 10], and w drawn from the kernel itself so the density stays
/// away from underflow.
struct TransitionProbe {
  StateVector a;
  StateVector w;
  double t;
};

std::vector<TransitionProbe> random_transition_probes(unsigned n, std::size_t count, std::uint64_t seed);

struct SymmetryReport {
  unsigned order = 0;
  std::size_t trials = 0;
  double max_relative_error = 0.0;
  /// Swapping (a, w) -> (w*, a*) twice restores every probe bit-for-bit.
  bool involution_holds = true;
};

/// Evaluates pi_a(w, t) against pi_{w*}(a*, t) on random probes. Requires n <= 6.
SymmetryReport mc_transition_symmetry(unsigned n, std::size_t trials, std::uint64_t seed);

}  // namespace intbm
