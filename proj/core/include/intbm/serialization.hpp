#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "intbm/exact_matrix.hpp"
#include "intbm/sampling.hpp"
#include "intbm/spectral.hpp"

namespace intbm {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

/// {"name": ..., "dim": N, "entries": [["num/den", ...], ...]} for an (N+1) x (N+1) matrix.
std::string matrix_to_json(const ExactMatrix& m, std::string_view name);
ExactMatrix matrix_from_json(std::string_view json);

/// {"terms": [{"coeff": float, "coeff_exact": "num/den", "rate": "k+1/2"}, ...]}
std::string expansion_to_json(const CorrelationExpansion& expansion);
CorrelationExpansion expansion_from_json(std::string_view json);

/// {"j": j, "k": k, "nonnegative_lag": {...}, "nonpositive_lag": {...}}
std::string cross_correlation_to_json(const CrossCorrelation& c);

/// Path CSV: a "# seed=S stream=P order=n" comment line, then "time,<p>0,...,<p>n"
/// where <p> is the component prefix ('w' or 'x').
void write_path_csv(std::ostream& os, const PathSample& path, char prefix = 'w');
/// Inverse of write_path_csv; throws std::invalid_argument on malformed input.
PathSample read_path_csv(std::istream& is);

std::string estimate_to_json(const MCEstimate& estimate);

}  // namespace intbm
