#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "intbm/exact_matrix.hpp"

namespace intbm {

// Every builder below takes the top index N and returns an (N+1) x (N+1) matrix.

/// Gamma_{nm} = 1/(n-m)! for n >= m. Maps scaled states to the renewal drift.
DimFreeMatrix gamma_family();
/// B_{nm} = (n+m)!/(m!(n-m)!) for n >= m.
DimFreeMatrix b_family();
/// A_{nm} = (-1)^{n+m} (n+m)!/(m!(n-m)!) for n >= m. Maps H(v) to G(v).
DimFreeMatrix a_family();
/// (A^{-1})_{nm} = (2m+1) n!/((n+m+1)!(n-m)!) for n >= m, built from its own closed form.
DimFreeMatrix a_inverse_family();
/// diag(1, 3, 5, ...).
DimFreeMatrix lambda_family();
/// Hilbert-type matrix 1/(j+k+1).
DimFreeMatrix rho_inverse_family();

ExactMatrix gamma_matrix(std::size_t dim);
ExactMatrix b_matrix(std::size_t dim);
ExactMatrix a_matrix(std::size_t dim);
ExactMatrix a_inverse_matrix(std::size_t dim);
ExactMatrix lambda_matrix(std::size_t dim);
ExactMatrix rho_inverse_matrix(std::size_t dim);

/// Inverse of rho_inverse_matrix(dim) from the explicit alternating sum
///   rho_{jk} = (-1)^{j+k} sum_{m >= max(j,k)}^{N} (j+m)!(k+m)!(2m+1) / ((j!)^2 (k!)^2 (m-j)! (m-k)!).
/// Not dimension-free: the upper limit of the sum is N.
ExactMatrix rho_matrix(std::size_t dim);

/// A' Lambda A, the inverse covariance of (W_0(1), ..., W_N(1)).
ExactMatrix unit_time_precision(std::size_t dim);

/// rho through the factorization D^{-1} A' Lambda A D^{-1} with D = diag(j!).
ExactMatrix rho_matrix_factored(std::size_t dim);

/// Named exact identity, evaluated at one dimension.
struct IdentityCheck {
  std::string name;
  std::size_t dim = 0;
  bool holds = false;
};

/// A Gamma = B, Gamma Gamma* = I, A = B*, A A^{-1} = A^{-1} A = I, each at N = 0..max_dim.
std::vector<IdentityCheck> check_matrix_identities(std::size_t max_dim);

/// Names of the families that must be dimension-free.
std::vector<DimFreeMatrix> dimension_free_families();

}  // namespace intbm
