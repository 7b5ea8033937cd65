#include "intbm/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace intbm {
namespace {

void require_increasing(std::span<const double> times) {
  if (times.empty()) throw std::invalid_argument("sampling: no sample times given");
  for (double t : times)
    if (!std::isfinite(t)) throw std::invalid_argument("sampling: non-finite sample time");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("sampling: times must be strictly increasing");
}

std::vector<double> exponentiated(std::span<const double> times) {
  require_increasing(times);
  std::vector<double> out(times.size());
  std::transform(times.begin(), times.end(), out.begin(), [](double t) { return std::exp(t); });
  // exp can collapse distinct inputs or overflow at the extremes.
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(out[i] > 0.0) || !std::isfinite(out[i]) || (i > 0 && !(out[i] > out[i - 1])))
      throw std::invalid_argument("sample_x: times out of the representable range after exp");
  }
  return out;
}

PathSample to_stationary(PathSample path, std::span<const double> times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::vector<double> x(path.states[i].values().begin(), path.states[i].values().end());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] *= std::exp(-(static_cast<double>(k) + 0.5) * times[i]);
    path.states[i] = StateVector(std::move(x));
  }
  path.times.assign(times.begin(), times.end());
  return path;
}

}  // namespace

RenewalStep::RenewalStep(unsigned order, double dt) : order_(order), dt_(dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::domain_error("RenewalStep: lag must be finite and positive");
  const Eigen::MatrixXd drift = drift_matrix(order, dt);
  const Eigen::MatrixXd unit = unit_time_cholesky(order);
  const Eigen::VectorXd spread = TimeScaling(dt, order).inverse_diagonal();
  const std::size_t dim = order + 1;
  drift_.assign(dim * dim, 0.0);
  noise_.assign(dim * dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      drift_[k * dim + i] = drift(k, i);
      noise_[k * dim + i] = spread(k) * unit(k, i);
    }
  }
}

void RenewalStep::advance(std::span<double> state, RandomStream& rng) const {
  const std::size_t dim = order_ + 1;
  std::array<double, kMaxFloatOrder + 1> z{};
  std::array<double, kMaxFloatOrder + 1> next{};
  for (std::size_t i = 0; i < dim; ++i) z[i] = rng.next_normal();
  for (std::size_t k = 0; k < dim; ++k) {
    double sum = 0.0;
    const double* drift_row = &drift_[k * dim];
    const double* noise_row = &noise_[k * dim];
    for (std::size_t i = 0; i <= k; ++i) sum += drift_row[i] * state[i] + noise_row[i] * z[i];
    next[k] = sum;
  }
  std::copy_n(next.begin(), dim, state.begin());
}

PathSample sample_w(unsigned n, std::span<const double> times, std::uint64_t seed, std::uint64_t stream) {
  require_increasing(times);
  if (!(times.front() > 0.0)) throw std::invalid_argument("sample_w: first time must be positive");
  if (n > kMaxFloatOrder) throw std::invalid_argument("sample_w: order exceeds the floating-point limit");

  PathSample out;
  out.seed = seed;
  out.stream = stream;
  out.times.assign(times.begin(), times.end());
  out.states.reserve(times.size());

  RandomStream rng(seed, stream);
  std::vector<double> state(n + 1, 0.0);
  double previous = 0.0;
  for (double t : times) {
    RenewalStep(n, t - previous).advance(state, rng);
    out.states.emplace_back(state);
    previous = t;
  }
  return out;
}

PathSample sample_x(unsigned n, std::span<const double> times, std::uint64_t seed, std::uint64_t stream) {
  const std::vector<double> w_times = exponentiated(times);
  return to_stationary(sample_w(n, w_times, seed, stream), times);
}

void parallel_for_paths(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
}

std::vector<PathSample> sample_w_paths(unsigned n, std::span<const double> times, std::uint64_t seed,
                                       std::size_t n_paths) {
  require_increasing(times);
  std::vector<PathSample> out(n_paths);
  parallel_for_paths(n_paths, [&](std::size_t p) { out[p] = sample_w(n, times, seed, p); });
  return out;
}

std::vector<PathSample> sample_x_paths(unsigned n, std::span<const double> times, std::uint64_t seed,
                                       std::size_t n_paths) {
  const std::vector<double> w_times = exponentiated(times);
  std::vector<PathSample> out(n_paths);
  parallel_for_paths(n_paths, [&](std::size_t p) { out[p] = to_stationary(sample_w(n, w_times, seed, p), times); });
  return out;
}

void CompensatedSum::add(double value) {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value))
    compensation_ += (sum_ - t) + value;
  else
    compensation_ += (value - t) + sum_;
  sum_ = t;
}

MCEstimate summarize(std::span<const double> values, std::size_t grid_size, std::uint64_t seed) {
  if (values.size() < 2) throw std::invalid_argument("summarize: need at least two samples");
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  const double mean = sum.value() / static_cast<double>(values.size());
  CompensatedSum squares;
  for (double v : values) squares.add((v - mean) * (v - mean));
  const double variance = squares.value() / static_cast<double>(values.size() - 1);
  return MCEstimate{mean, std::sqrt(variance / static_cast<double>(values.size())), values.size(), grid_size, seed};
}

double laplace_functional_closed_form(double theta) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw std::domain_error("theta must be finite and non-negative");
  const double r = std::sqrt(theta / 2.0);
  const double ch = std::cosh(r);
  const double c = std::cos(r);
  return std::sqrt(2.0 / (ch * ch + c * c));
}

MCEstimate mc_quadratic_laplace(double theta, std::size_t n_paths, std::size_t grid_size, std::uint64_t seed) {
  const double thetas[] = {theta};
  return mc_quadratic_laplace(thetas, n_paths, grid_size, seed).front();
}

std::vector<MCEstimate> mc_quadratic_laplace(std::span<const double> thetas, std::size_t n_paths,
                                             std::size_t grid_size, std::uint64_t seed) {
  for (double theta : thetas)
    if (!(theta > 0.0) || !std::isfinite(theta)) throw std::domain_error("mc_quadratic_laplace: theta must be positive");
  if (grid_size < 100) throw std::invalid_argument("mc_quadratic_laplace: grid_size must be at least 100");
  if (n_paths < 2) throw std::invalid_argument("mc_quadratic_laplace: need at least two paths");

  const double h = 1.0 / static_cast<double>(grid_size);
  const RenewalStep step(1, h);
  std::vector<double> integrals(n_paths);
  parallel_for_paths(n_paths, [&](std::size_t p) {
    RandomStream rng(seed, p);
    std::array<double, 2> state{0.0, 0.0};
    double interior = 0.0;
    for (std::size_t i = 1; i < grid_size; ++i) {
      step.advance(state, rng);
      interior += state[1] * state[1];
    }
    step.advance(state, rng);
    integrals[p] = h * (interior + 0.5 * state[1] * state[1]);
  });

  std::vector<MCEstimate> out;
  std::vector<double> values(n_paths);
  for (double theta : thetas) {
    const double rate = 0.5 * theta * theta;
    std::transform(integrals.begin(), integrals.end(), values.begin(),
                   [rate](double integral) { return std::exp(-rate * integral); });
    out.push_back(summarize(values, grid_size, seed));
  }
  return out;
}

std::vector<TransitionProbe> random_transition_probes(unsigned n, std::size_t count, std::uint64_t seed) {
  if (n > kMaxFloatOrder) throw std::invalid_argument("random_transition_probes: order too large");
  RandomStream rng(seed, 0);
  const Eigen::MatrixXd unit = unit_time_cholesky(n);
  std::vector<TransitionProbe> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = 0.1 + 9.9 * rng.next_uniform();
    std::vector<double> a(n + 1);
    for (auto& v : a) v = 0.1 + 9.9 * rng.next_uniform();
    StateVector a_state(std::move(a));
    Eigen::VectorXd z(n + 1);
    for (unsigned k = 0; k <= n; ++k) z(k) = rng.next_normal();
    const Eigen::VectorXd noise = TimeScaling(t, n).inverse_diagonal().asDiagonal() * (unit * z);
    const StateVector mu = mean_mu(a_state, t);
    std::vector<double> w(n + 1);
    for (unsigned k = 0; k <= n; ++k) w[k] = mu[k] + noise(k);
    out.push_back({std::move(a_state), StateVector(std::move(w)), t});
  }
  return out;
}

SymmetryReport mc_transition_symmetry(unsigned n, std::size_t trials, std::uint64_t seed) {
  if (n > 6) throw std::invalid_argument("mc_transition_symmetry: order must be at most 6");
  SymmetryReport report{n, trials, 0.0, true};
  for (const auto& probe : random_transition_probes(n, trials, seed)) {
    const double forward = log_transition_density(probe.w, probe.a, probe.t);
    const StateVector swapped_w = probe.a.star();
    const StateVector swapped_a = probe.w.star();
    const double backward = log_transition_density(swapped_w, swapped_a, probe.t);
    report.max_relative_error = std::max(report.max_relative_error, std::abs(std::expm1(forward - backward)));
    if (!(swapped_a.star() == probe.w && swapped_w.star() == probe.a)) report.involution_holds = false;
  }
  return report;
}

}  // namespace intbm
