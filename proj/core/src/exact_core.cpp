#include "intbm/exact_core.hpp"

namespace intbm {
namespace {

bool above_diagonal(std::size_t row, std::size_t col) { return col > row; }

BigRational sign_of(std::size_t parity) { return parity % 2 == 0 ? BigRational(1) : BigRational(-1); }

// (n+m)! / (m! (n-m)!), n >= m
BigRational b_entry(std::size_t n, std::size_t m) {
  return BigRational(factorial(static_cast<unsigned>(n + m)),
                     factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(n - m)));
}

}  // namespace

DimFreeMatrix gamma_family() {
  return DimFreeMatrix(
      "gamma",
      [](std::size_t n, std::size_t m) { return BigRational(mpz_class(1), factorial(static_cast<unsigned>(n - m))); },
      above_diagonal);
}

DimFreeMatrix b_family() { return DimFreeMatrix("b", b_entry, above_diagonal); }

DimFreeMatrix a_family() {
  return DimFreeMatrix(
      "a", [](std::size_t n, std::size_t m) { return sign_of(n + m) * b_entry(n, m); }, above_diagonal);
}

DimFreeMatrix a_inverse_family() {
  return DimFreeMatrix(
      "a_inv",
      [](std::size_t n, std::size_t m) {
        const auto nu = static_cast<unsigned>(n);
        const auto mu = static_cast<unsigned>(m);
        return BigRational(mpz_class(2 * mu + 1) * factorial(nu), factorial(nu + mu + 1) * factorial(nu - mu));
      },
      above_diagonal);
}

DimFreeMatrix lambda_family() {
  return DimFreeMatrix(
      "lambda", [](std::size_t k, std::size_t) { return BigRational(static_cast<std::int64_t>(2 * k + 1)); },
      [](std::size_t row, std::size_t col) { return row != col; });
}

DimFreeMatrix rho_inverse_family() {
  return DimFreeMatrix("rho_inv", [](std::size_t j, std::size_t k) {
    return BigRational(1, static_cast<std::int64_t>(j + k + 1));
  });
}

ExactMatrix gamma_matrix(std::size_t dim) { return gamma_family().realize(dim); }
ExactMatrix b_matrix(std::size_t dim) { return b_family().realize(dim); }
ExactMatrix a_matrix(std::size_t dim) { return a_family().realize(dim); }
ExactMatrix a_inverse_matrix(std::size_t dim) { return a_inverse_family().realize(dim); }
ExactMatrix lambda_matrix(std::size_t dim) { return lambda_family().realize(dim); }
ExactMatrix rho_inverse_matrix(std::size_t dim) { return rho_inverse_family().realize(dim); }

ExactMatrix rho_matrix(std::size_t dim) {
  ExactMatrix out(dim + 1, dim + 1);
  for (std::size_t j = 0; j <= dim; ++j) {
    const auto ju = static_cast<unsigned>(j);
    for (std::size_t k = 0; k <= j; ++k) {
      const auto ku = static_cast<unsigned>(k);
      const mpz_class scale = factorial(ju) * factorial(ju) * factorial(ku) * factorial(ku);
      BigRational total;
      for (std::size_t m = j; m <= dim; ++m) {
        const auto mu = static_cast<unsigned>(m);
        total += BigRational(factorial(ju + mu) * factorial(ku + mu) * (2 * mu + 1),
                             scale * factorial(mu - ju) * factorial(mu - ku));
      }
      out(j, k) = sign_of(j + k) * total;
      out(k, j) = out(j, k);
    }
  }
  return out;
}

ExactMatrix unit_time_precision(std::size_t dim) {
  const ExactMatrix a = a_matrix(dim);
  return a.transpose() * lambda_matrix(dim) * a;
}

ExactMatrix rho_matrix_factored(std::size_t dim) {
  ExactMatrix out = unit_time_precision(dim);
  for (std::size_t j = 0; j <= dim; ++j)
    for (std::size_t k = 0; k <= dim; ++k)
      out(j, k) /= BigRational(factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(k)));
  return out;
}

std::vector<IdentityCheck> check_matrix_identities(std::size_t max_dim) {
  std::vector<IdentityCheck> out;
  out.reserve(5 * (max_dim + 1));
  for (std::size_t dim = 0; dim <= max_dim; ++dim) {
    const ExactMatrix a = a_matrix(dim);
    const ExactMatrix a_inv = a_inverse_matrix(dim);
    const ExactMatrix b = b_matrix(dim);
    const ExactMatrix gamma = gamma_matrix(dim);
    out.push_back({"A*Gamma == B", dim, a * gamma == b});
    out.push_back({"Gamma*star(Gamma) == I", dim, (gamma * star(gamma)).is_identity()});
    out.push_back({"A == star(B)", dim, a == star(b)});
    out.push_back({"A*A^-1 == I", dim, (a * a_inv).is_identity()});
    out.push_back({"A^-1*A == I", dim, (a_inv * a).is_identity()});
  }
  return out;
}

std::vector<DimFreeMatrix> dimension_free_families() {
  return {gamma_family(), b_family(), a_family(), a_inverse_family(), lambda_family(), rho_inverse_family()};
}

}  // namespace intbm
