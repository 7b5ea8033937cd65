#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "intbm/serialization.hpp"
#include "json.hpp"

namespace cli = intbm::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "intbm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("intbm_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("matrices prints exact entries") {
  const auto r = invoke({"matrices", "--n", "2", "--which", "rho"});
  REQUIRE(r.code == cli::exit_code::ok);
  const auto doc = json::parse(r.out);
  CHECK(doc["entries"] == json::array({json::array({"9/1", "-36/1", "30/1"}), json::array({"-36/1", "192/1", "-180/1"}),
                                       json::array({"30/1", "-180/1", "180/1"})}));
  CHECK(invoke({"matrices", "--n", "1", "--which", "a_inv"}).out.find("\"1/2\"") != std::string::npos);
}

TEST_CASE("density queries") {
  const auto r = invoke({"density", "--n", "0", "--t", "1", "--w", "0"});
  REQUIRE(r.code == cli::exit_code::ok);
  const auto doc = json::parse(r.out);
  CHECK(doc["kind"] == "marginal");
  CHECK(doc["density"].get<double>() == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));

  const auto t = invoke({"density", "--t", "2", "--w", "1,0.5", "--a", "0.2,-0.1"});
  REQUIRE(t.code == cli::exit_code::ok);
  CHECK(json::parse(t.out)["kind"] == "transition");

  const auto dir = scratch_dir("request");
  const auto request = dir / "request.json";
  std::ofstream(request) << R"({"n": 1, "t": 1.0, "w": [0, 0]})";
  const auto q = invoke({"density", "--request", request.string()});
  REQUIRE(q.code == cli::exit_code::ok);
  CHECK(json::parse(q.out)["density"].get<double>() == doctest::Approx(0.55133).epsilon(1e-5));
}

TEST_CASE("correlation tables") {
  const auto r = invoke({"correlate", "--n", "1", "--tau-max", "2", "--count", "5"});
  REQUIRE(r.code == cli::exit_code::ok);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "tau,r0_0,r0_1,r1_0,r1_1");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 5);
  CHECK(r.out.find("\n0,1,") != std::string::npos);

  const auto j = invoke({"correlate", "--n", "1", "--format", "json"});
  REQUIRE(j.code == cli::exit_code::ok);
  CHECK(json::parse(j.out)["pairs"].size() == 4);
}

TEST_CASE("sample output parses back to the same path") {
  const auto r = invoke({"sample", "--n", "2", "--times", "0.5,1,2", "--seed", "42", "--path-index", "3"});
  REQUIRE(r.code == cli::exit_code::ok);
  std::istringstream in(r.out);
  CHECK(intbm::read_path_csv(in) == intbm::sample_w(2, std::vector<double>{0.5, 1.0, 2.0}, 42, 3));

  const auto grid = invoke({"sample", "--n", "1", "--t-max", "1", "--count", "4", "--seed", "1", "--format", "json"});
  REQUIRE(grid.code == cli::exit_code::ok);
  const auto doc = json::parse(grid.out);
  CHECK(doc["times"] == json::array({0.25, 0.5, 0.75, 1.0}));
  CHECK(doc["states"].size() == 4);

  const auto x = invoke({"sample", "--n", "1", "--times", "-1,0,1", "--seed", "1", "--kind", "x"});
  REQUIRE(x.code == cli::exit_code::ok);
  CHECK(x.out.find("time,x0,x1") != std::string::npos);
}

TEST_CASE("identical flags give identical bytes") {
  const std::vector<std::string> args{"sample", "--n", "3", "--t-max", "5", "--count", "50", "--seed", "7"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> verify{"verify", "--suite", "exact", "--seed", "42"};
  CHECK(invoke(verify).out == invoke(verify).out);
}

TEST_CASE("verify reports JSON") {
  const auto r = invoke({"verify", "--suite", "spectral", "--seed", "42"});
  CHECK(r.code == cli::exit_code::ok);
  const auto doc = json::parse(r.out);
  REQUIRE(doc.is_array());
  for (const auto& entry : doc) {
    CHECK(entry.contains("test"));
    CHECK(entry.contains("statistic"));
    CHECK(entry.contains("bound"));
    CHECK(entry["pass"] == true);
  }
}

TEST_CASE("exit codes and error lines") {
  auto error_kind = [](const Outcome& r) { return json::parse(r.err)["error"].get<std::string>(); };

  const auto missing_seed = invoke({"sample", "--n", "1", "--times", "1"});
  CHECK(missing_seed.code == cli::exit_code::usage);
  CHECK(error_kind(missing_seed) == "usage");

  CHECK(invoke({"frobnicate"}).code == cli::exit_code::usage);
  CHECK(invoke({"matrices", "--n", "2", "--which", "nope"}).code == cli::exit_code::usage);
  CHECK(invoke({"matrices", "--n", "2", "--format", "csv"}).code == cli::exit_code::usage);
  CHECK(invoke({"verify", "--suite", "bogus", "--seed", "1"}).code == cli::exit_code::usage);

  const auto bad_t = invoke({"density", "--n", "0", "--t", "-1", "--w", "0"});
  CHECK(bad_t.code == cli::exit_code::domain);
  CHECK(error_kind(bad_t) == "domain");
  CHECK(invoke({"sample", "--n", "1", "--times", "2,1", "--seed", "3"}).code == cli::exit_code::domain);

  const auto io = invoke({"matrices", "--n", "1", "--out", "/nonexistent-dir/x.json"});
  CHECK(io.code == cli::exit_code::io);
  CHECK(error_kind(io) == "io");
  CHECK(invoke({"density", "--request", "/nonexistent-dir/req.json"}).code == cli::exit_code::io);
}

TEST_CASE("relative output paths resolve under the output directory variable") {
  const auto dir = scratch_dir("outdir");
  ::setenv("INTBM_OUTPUT_DIR", dir.c_str(), 1);
  const auto r = invoke({"matrices", "--n", "1", "--which", "gamma", "--out", "gamma.json"});
  ::unsetenv("INTBM_OUTPUT_DIR");
  REQUIRE(r.code == cli::exit_code::ok);
  CHECK(r.out.empty());
  const auto doc = json::parse(slurp(dir / "gamma.json"));
  CHECK(doc["name"] == "gamma");
}
