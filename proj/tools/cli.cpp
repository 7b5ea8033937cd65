#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "intbm/densities.hpp"
#include "intbm/exact_core.hpp"
#include "intbm/sampling.hpp"
#include "intbm/serialization.hpp"
#include "intbm/spectral.hpp"
#include "intbm/verify.hpp"

namespace intbm::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kOutputDirEnv = "INTBM_OUTPUT_DIR";

unsigned require_n(const RunConfig& config) {
  if (!config.n) throw UsageError("--n is required");
  return *config.n;
}

std::uint64_t require_seed(const RunConfig& config) {
  if (!config.seed) throw UsageError("--seed is required for stochastic subcommands");
  return *config.seed;
}

void require_format(const RunConfig& config, OutputFormat allowed, const char* subcommand) {
  if (config.format && *config.format != allowed)
    throw UsageError(std::string(subcommand) + " only supports --format " +
                     (allowed == OutputFormat::json ? "json" : "csv"));
}

std::string render_matrices(const RunConfig& config) {
  require_format(config, OutputFormat::json, "matrices");
  const unsigned n = require_n(config);
  const std::string& which = config.which;
  ExactMatrix m;
  if (which == "gamma") m = gamma_matrix(n);
  else if (which == "b") m = b_matrix(n);
  else if (which == "a") m = a_matrix(n);
  else if (which == "a_inv") m = a_inverse_matrix(n);
  else if (which == "lambda") m = lambda_matrix(n);
  else if (which == "rho_inv") m = rho_inverse_matrix(n);
  else if (which == "rho") m = rho_matrix(n);
  else if (which == "precision") m = unit_time_precision(n);
  else throw UsageError("unknown matrix '" + which + "'");
  return matrix_to_json(m, which) + "\n";
}

std::string render_density(const RunConfig& config) {
  require_format(config, OutputFormat::json, "density");
  std::optional<unsigned> n = config.n;
  std::optional<double> t = config.t;
  std::vector<double> w = config.w;
  std::vector<double> a = config.a;
  if (!config.request.empty()) {
    std::ifstream in(config.request);
    if (!in) throw IoError("cannot read request file '" + config.request + "'");
    json doc;
    try {
      doc = json::parse(in);
      if (doc.contains("n")) n = doc.at("n").get<unsigned>();
      if (doc.contains("t")) t = doc.at("t").get<double>();
      if (doc.contains("w")) w = doc.at("w").get<std::vector<double>>();
      if (doc.contains("a")) a = doc.at("a").get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed request file: ") + e.what());
    }
  }
  if (!t) throw UsageError("--t is required");
  if (w.empty()) throw UsageError("--w is required");
  if (n && *n + 1 != w.size()) throw UsageError("--w must have n+1 components");
  if (!a.empty() && a.size() != w.size()) throw UsageError("--a must have the same length as --w");

  const StateVector w_state(w);
  json doc = {{"n", w_state.order()}, {"t", *t}};
  double log_density = 0.0;
  if (a.empty()) {
    log_density = log_density_w(w_state, *t);
    doc["kind"] = "marginal";
  } else {
    log_density = log_transition_density(w_state, StateVector(a), *t);
    doc["kind"] = "transition";
  }
  doc["log_density"] = log_density;
  doc["density"] = std::exp(log_density);
  return doc.dump() + "\n";
}

std::string render_correlate(const RunConfig& config) {
  const unsigned n = require_n(config);
  if (!(config.tau_max > 0.0)) throw std::domain_error("--tau-max must be positive");
  std::vector<CrossCorrelation> pairs;
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = 0; k <= n; ++k) pairs.push_back(cross_correlation(j, k));

  if (config.format.value_or(OutputFormat::csv) == OutputFormat::json) {
    json doc = {{"order", n}, {"pairs", json::array()}};
    for (const auto& c : pairs) doc["pairs"].push_back(json::parse(cross_correlation_to_json(c)));
    return doc.dump() + "\n";
  }
  const std::size_t count = config.count == 0 ? 101 : config.count;
  if (count < 2) throw UsageError("--count must be at least 2");
  std::ostringstream os;
  os << "tau";
  for (const auto& c : pairs) os << ",r" << c.j << '_' << c.k;
  os << '\n';
  for (std::size_t i = 0; i < count; ++i) {
    const double tau = -config.tau_max + 2.0 * config.tau_max * static_cast<double>(i) / static_cast<double>(count - 1);
    os << format_double(tau);
    for (const auto& c : pairs) os << ',' << format_double(c(tau));
    os << '\n';
  }
  return os.str();
}

std::vector<double> sample_times(const RunConfig& config) {
  if (!config.times.empty()) {
    if (config.t_max) throw UsageError("give either --times or --t-max, not both");
    return config.times;
  }
  if (!config.t_max) throw UsageError("--times or --t-max is required");
  const std::size_t count = config.count == 0 ? 100 : config.count;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = *config.t_max * static_cast<double>(i + 1) / static_cast<double>(count);
  return out;
}

std::string render_sample(const RunConfig& config) {
  const unsigned n = require_n(config);
  const std::uint64_t seed = require_seed(config);
  const std::vector<double> times = sample_times(config);
  PathSample path;
  if (config.kind == "w") path = sample_w(n, times, seed, config.path_index);
  else if (config.kind == "x") path = sample_x(n, times, seed, config.path_index);
  else throw UsageError("--kind must be w or x");

  if (config.format.value_or(OutputFormat::csv) == OutputFormat::json) {
    json states = json::array();
    for (const auto& s : path.states) states.push_back(std::vector<double>(s.values().begin(), s.values().end()));
    json doc = {{"kind", config.kind}, {"order", n},         {"seed", path.seed},
                {"stream", path.stream}, {"times", path.times}, {"states", std::move(states)}};
    return doc.dump() + "\n";
  }
  std::ostringstream os;
  write_path_csv(os, path, config.kind.front());
  return os.str();
}

std::string render_verify(const RunConfig& config, bool& all_pass) {
  require_format(config, OutputFormat::json, "verify");
  verify::Options options;
  options.seed = require_seed(config);
  options.paths = config.paths;
  options.grid = config.grid;
  if (!config.thetas.empty()) options.thetas = config.thetas;
  verify::Suite suite;
  try {
    suite = verify::parse_suite(config.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto results = verify::run_suite(suite, options);
  all_pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  return verify::report_to_json(results) + "\n";
}

std::filesystem::path resolve_output(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') path = std::filesystem::path(dir) / path;
  }
  return path;
}

void emit(const RunConfig& config, const std::string& content, std::ostream& out) {
  if (config.out.empty()) {
    out << content;
    return;
  }
  const auto path = resolve_output(config.out);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << content;
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    bool all_pass = true;
    std::string content;
    switch (config.subcommand) {
      case Subcommand::matrices: content = render_matrices(config); break;
      case Subcommand::density: content = render_density(config); break;
      case Subcommand::correlate: content = render_correlate(config); break;
      case Subcommand::sample: content = render_sample(config); break;
      case Subcommand::verify: content = render_verify(config, all_pass); break;
    }
    emit(config, content, out);
    return all_pass ? exit_code::ok : exit_code::check_failed;
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return exit_code::usage;
  } catch (const IoError& e) {
    report_error(err, "io", e.what());
    return exit_code::io;
  } catch (const std::domain_error& e) {
    report_error(err, "domain", e.what());
    return exit_code::domain;
  } catch (const std::invalid_argument& e) {
    report_error(err, "domain", e.what());
    return exit_code::domain;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact matrices, densities, correlations and samplers for integrated Brownian motion"};
  app.require_subcommand(1);

  std::string format;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "Output file (relative paths resolve under $INTBM_OUTPUT_DIR)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", config.n, "Order n (state has n+1 components)"); };

  auto* matrices = app.add_subcommand("matrices", "Dump an exact matrix as JSON");
  add_n(matrices);
  matrices->add_option("--which", config.which, "gamma, b, a, a_inv, lambda, rho_inv, rho, precision");
  add_common(matrices);

  auto* density = app.add_subcommand("density", "Marginal or transition density of W(t)");
  add_n(density);
  density->add_option("--t", config.t, "Elapsed time t > 0");
  density->add_option("--w", config.w, "State w, comma separated")->delimiter(',');
  density->add_option("--a", config.a, "Starting state a (transition density)")->delimiter(',');
  density->add_option("--request", config.request, "JSON request file with n, t, w, a");
  add_common(density);

  auto* correlate = app.add_subcommand("correlate", "Cross-covariance table of the stationary processes");
  add_n(correlate);
  correlate->add_option("--tau-max", config.tau_max, "Lag grid spans [-tau_max, tau_max]");
  correlate->add_option("--count", config.count, "Number of lag points (default 101)");
  add_common(correlate);

  auto* sample = app.add_subcommand("sample", "Exact sample path of W or X");
  add_n(sample);
  sample->add_option("--times", config.times, "Sample times, comma separated")->delimiter(',');
  sample->add_option("--t-max", config.t_max, "Uniform grid end time (with --count)");
  sample->add_option("--count", config.count, "Number of uniform grid points (default 100)");
  sample->add_option("--seed", config.seed, "Master seed");
  sample->add_option("--path-index", config.path_index, "Substream index");
  sample->add_option("--kind", config.kind, "w (integrated Brownian motion) or x (stationary transform)");
  add_common(sample);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites, JSON report");
  verify_cmd->add_option("--suite", config.suite, "exact, spectral, density, mc, all");
  verify_cmd->add_option("--seed", config.seed, "Master seed");
  verify_cmd->add_option("--paths", config.paths, "Monte Carlo paths");
  verify_cmd->add_option("--grid", config.grid, "Quadrature grid for the Laplace functional");
  verify_cmd->add_option("--theta", config.thetas, "Laplace functional parameters")->delimiter(',');
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return exit_code::usage;
  }

  if (matrices->parsed()) config.subcommand = Subcommand::matrices;
  else if (density->parsed()) config.subcommand = Subcommand::density;
  else if (correlate->parsed()) config.subcommand = Subcommand::correlate;
  else if (sample->parsed()) config.subcommand = Subcommand::sample;
  else config.subcommand = Subcommand::verify;
  if (!format.empty()) config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

  return run(config, out, err);
}

}  // namespace intbm::cli
