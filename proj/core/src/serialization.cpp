#include "intbm/serialization.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace intbm {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (result.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer, result.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return value;
}

std::string matrix_to_json(const ExactMatrix& m, std::string_view name) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("matrix_to_json: expected a non-empty square matrix");
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    entries.push_back(std::move(row));
  }
  json doc = {{"name", std::string(name)}, {"dim", m.rows() - 1}, {"entries", std::move(entries)}};
  return doc.dump();
}

ExactMatrix matrix_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto size = doc.at("dim").get<std::size_t>() + 1;
    const json& entries = doc.at("entries");
    if (entries.size() != size) throw std::invalid_argument("matrix_from_json: row count does not match dim");
    ExactMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      if (entries[i].size() != size) throw std::invalid_argument("matrix_from_json: ragged row");
      for (std::size_t j = 0; j < size; ++j) out(i, j) = BigRational::parse(entries[i][j].get<std::string>());
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("matrix_from_json: ") + e.what());
  }
}

namespace {

json expansion_json(const CorrelationExpansion& expansion) {
  json terms = json::array();
  for (const auto& term : expansion.terms())
    terms.push_back({{"coeff", term.coeff.to_double()},
                     {"coeff_exact", term.coeff.to_string()},
                     {"rate", term.rate.to_string()}});
  return json{{"terms", std::move(terms)}};
}

}  // namespace

std::string expansion_to_json(const CorrelationExpansion& expansion) { return expansion_json(expansion).dump(); }

CorrelationExpansion expansion_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    std::vector<CorrelationTerm> terms;
    for (const auto& term : doc.at("terms")) {
      const BigRational coeff = BigRational::parse(term.at("coeff_exact").get<std::string>());
      terms.push_back({coeff, HalfInteger::parse(term.at("rate").get<std::string>())});
    }
    return CorrelationExpansion(std::move(terms));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("expansion_from_json: ") + e.what());
  }
}

std::string cross_correlation_to_json(const CrossCorrelation& c) {
  json doc = {{"j", c.j},
              {"k", c.k},
              {"nonnegative_lag", expansion_json(c.nonnegative_lag)},
              {"nonpositive_lag", expansion_json(c.nonpositive_lag)}};
  return doc.dump();
}

void write_path_csv(std::ostream& os, const PathSample& path, char prefix) {
  const unsigned n = path.order();
  os << "# seed=" << path.seed << " stream=" << path.stream << " order=" << n << '\n';
  os << "time";
  for (unsigned k = 0; k <= n; ++k) os << ',' << prefix << k;
  os << '\n';
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    os << format_double(path.times[i]);
    for (double v : path.states[i].values()) os << ',' << format_double(v);
    os << '\n';
  }
}

PathSample read_path_csv(std::istream& is) {
  PathSample out;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
    throw std::invalid_argument("read_path_csv: missing '# seed=...' line");
  unsigned order = 0;
  {
    std::istringstream meta(line.substr(2));
    std::string field;
    bool have_seed = false;
    bool have_order = false;
    while (meta >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "seed") {
        out.seed = std::stoull(value);
        have_seed = true;
      } else if (key == "stream") {
        out.stream = std::stoull(value);
      } else if (key == "order") {
        order = static_cast<unsigned>(std::stoul(value));
        have_order = true;
      }
    }
    if (!have_seed || !have_order) throw std::invalid_argument("read_path_csv: metadata needs seed and order");
  }
  if (!std::getline(is, line) || line.rfind("time,", 0) != 0)
    throw std::invalid_argument("read_path_csv: missing header line");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(parse_double(std::string_view(line).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != order + 2) throw std::invalid_argument("read_path_csv: wrong column count");
    out.times.push_back(fields.front());
    out.states.emplace_back(std::vector<double>(fields.begin() + 1, fields.end()));
  }
  return out;
}

std::string estimate_to_json(const MCEstimate& estimate) {
  json doc = {{"mean", estimate.mean},
              {"std_error", estimate.std_error},
              {"n_paths", estimate.n_paths},
              {"grid_size", estimate.grid_size},
              {"seed", estimate.seed}};
  return doc.dump();
}

}  // namespace intbm
