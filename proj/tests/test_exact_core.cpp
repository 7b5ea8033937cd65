#include "doctest.h"

#include <initializer_list>
#include <random>

#include "intbm/exact_core.hpp"

using intbm::BigRational;
using intbm::ExactMatrix;

namespace {

ExactMatrix from_rows(std::initializer_list<std::initializer_list<BigRational>> rows) {
  ExactMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& value : row) m(i, j++) = value;
    ++i;
  }
  return m;
}

ExactMatrix random_rational(std::size_t size, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 17);
  ExactMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = BigRational(num(gen), den(gen));
  return m;
}

BigRational r(std::int64_t p, std::int64_t q = 1) { return BigRational(p, q); }

}  // namespace

TEST_CASE("star flips odd positions and is an involution") {
  CHECK(intbm::star(ExactMatrix::identity(4)) == ExactMatrix::identity(4));
  CHECK(intbm::star(intbm::gamma_matrix(1)) == from_rows({{r(1), r(0)}, {r(-1), r(1)}}));

  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix m = random_rational(5, gen);
    CHECK(intbm::star(intbm::star(m)) == m);
  }
}

TEST_CASE("small matrices") {
  CHECK(intbm::gamma_matrix(0) == from_rows({{r(1)}}));
  CHECK(intbm::gamma_matrix(2) == from_rows({{r(1), r(0), r(0)}, {r(1), r(1), r(0)}, {r(1, 2), r(1), r(1)}}));
  CHECK(intbm::b_matrix(1) == from_rows({{r(1), r(0)}, {r(1), r(2)}}));
  CHECK(intbm::b_matrix(2)(2, 2) == r(12));
  CHECK(intbm::a_matrix(2) == from_rows({{r(1), r(0), r(0)}, {r(-1), r(2), r(0)}, {r(1), r(-6), r(12)}}));
  CHECK(intbm::a_matrix(1) * intbm::gamma_matrix(1) == from_rows({{r(1), r(0)}, {r(1), r(2)}}));
  CHECK(intbm::a_inverse_matrix(1) == from_rows({{r(1), r(0)}, {r(1, 2), r(1, 2)}}));

  const ExactMatrix c = intbm::a_inverse_matrix(2);
  CHECK(c(2, 0) == r(1, 6));
  CHECK(c(2, 1) == r(1, 4));
  CHECK(c(2, 2) == r(1, 12));

  CHECK(intbm::lambda_matrix(0) == from_rows({{r(1)}}));
  CHECK(intbm::lambda_matrix(2) == from_rows({{r(1), r(0), r(0)}, {r(0), r(3), r(0)}, {r(0), r(0), r(5)}}));
}

TEST_CASE("rho and its inverse") {
  CHECK(intbm::rho_inverse_matrix(1) == from_rows({{r(1), r(1, 2)}, {r(1, 2), r(1, 3)}}));
  CHECK(intbm::rho_inverse_matrix(2) ==
        from_rows({{r(1), r(1, 2), r(1, 3)}, {r(1, 2), r(1, 3), r(1, 4)}, {r(1, 3), r(1, 4), r(1, 5)}}));
  CHECK(intbm::rho_matrix(1) == from_rows({{r(4), r(-6)}, {r(-6), r(12)}}));
  // The (2,0) entry is 30; 60 appears in some printed tables but fails rho * rho^{-1} = I.
  CHECK(intbm::rho_matrix(2) ==
        from_rows({{r(9), r(-36), r(30)}, {r(-36), r(192), r(-180)}, {r(30), r(-180), r(180)}}));

  for (std::size_t n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const ExactMatrix rho = intbm::rho_matrix(n);
    CHECK((rho * intbm::rho_inverse_matrix(n)).is_identity());
    CHECK(rho == intbm::rho_matrix_factored(n));
    CHECK(rho == intbm::rho_inverse_matrix(n).inverse());
    CHECK(rho.is_symmetric());
  }
}

TEST_CASE("structural properties hold for every size") {
  for (std::size_t n = 0; n <= 15; ++n) {
    CAPTURE(n);
    const ExactMatrix a = intbm::a_matrix(n);
    CHECK(a.is_lower_triangular());
    CHECK(intbm::gamma_matrix(n).is_lower_triangular());
    CHECK(intbm::b_matrix(n).is_lower_triangular());
    CHECK(intbm::rho_inverse_matrix(n).is_symmetric());
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(intbm::gamma_matrix(n)(k, k) == r(1));
      CHECK(a(k, k) == BigRational(intbm::factorial(2 * k), intbm::factorial(k)));
      CHECK(a(k, k).sign() > 0);
      CHECK(intbm::lambda_matrix(n)(k, k) == r(2 * static_cast<std::int64_t>(k) + 1));
    }
    CHECK(intbm::unit_time_precision(n) == a.transpose() * intbm::lambda_matrix(n) * a);
  }
}

TEST_CASE("identity suite through N = 50") {
  const auto checks = intbm::check_matrix_identities(50);
  CHECK(checks.size() >= 4 * 51);
  for (const auto& check : checks) {
    CAPTURE(check.name);
    CAPTURE(check.dim);
    CHECK(check.holds);
  }
}

TEST_CASE("identities checked directly at a large size") {
  const std::size_t n = 50;
  const ExactMatrix a = intbm::a_matrix(n);
  const ExactMatrix g = intbm::gamma_matrix(n);
  CHECK(a * g == intbm::b_matrix(n));
  CHECK((g * intbm::star(g)).is_identity());
  CHECK(a == intbm::star(intbm::b_matrix(n)));
  CHECK((a * intbm::a_inverse_matrix(n)).is_identity());
  CHECK(a * g == intbm::star(a));
}

TEST_CASE("dimension-free families agree on shared blocks") {
  for (const auto& family : intbm::dimension_free_families()) {
    CAPTURE(family.name());
    for (std::size_t n = 0; n <= 8; ++n) CHECK(family.realize(n) == family.realize(n + 3).leading_block(n + 1, n + 1));
  }
  CHECK(intbm::gamma_matrix(4) == intbm::gamma_matrix(7).leading_block(5, 5));
  CHECK(intbm::gamma_family().is_structural_zero(0, 3));
  CHECK_FALSE(intbm::gamma_family().is_structural_zero(3, 0));
  // rho depends on the truncation size.
  CHECK(intbm::rho_matrix(1) != intbm::rho_matrix(2).leading_block(2, 2));
}

TEST_CASE("singular inverse is rejected") {
  ExactMatrix m(2, 2);
  m(0, 0) = r(1);
  m(0, 1) = r(2);
  m(1, 0) = r(2);
  m(1, 1) = r(4);
  CHECK_THROWS_AS(m.inverse(), std::domain_error);
}
