#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace intbm::cli {

enum class Subcommand { matrices, density, correlate, sample, verify };
enum class OutputFormat { csv, json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int domain = 3;
inline constexpr int io = 4;
}  // namespace exit_code

struct RunConfig {
  Subcommand subcommand = Subcommand::matrices;
  std::optional<unsigned> n;
  std::optional<double> t;
  std::vector<double> times;
  std::optional<double> t_max;
  std::size_t count = 0;
  double tau_max = 5.0;
  std::vector<double> thetas;
  std::size_t paths = 100000;
  std::size_t grid = 1024;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<OutputFormat> format;

  std::string which = "a";          // matrices
  std::vector<double> w;            // density
  std::vector<double> a;            // density
  std::string request;              // density: JSON request file
  std::string kind = "w";           // sample: w or x
  std::uint64_t path_index = 0;     // sample
  std::string suite = "all";        // verify
};

/// Executes a parsed configuration. Results go to `out` (or the --out file);
/// failures print one JSON line {"error": kind, "message": ...} to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs. Usage errors return exit_code::usage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace intbm::cli
