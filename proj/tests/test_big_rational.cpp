#include "doctest.h"

#include <stdexcept>

#include "intbm/big_rational.hpp"

using intbm::BigRational;

TEST_CASE("rationals are kept in lowest terms") {
  const BigRational r(6, -4);
  CHECK(r.to_string() == "-3/2");
  CHECK(r.sign() == -1);
  CHECK(BigRational(9).to_string() == "9/1");
  CHECK(BigRational(0, 5).is_zero());
}

TEST_CASE("arithmetic and ordering") {
  const BigRational a(1, 3);
  const BigRational b(1, 6);
  CHECK(a + b == BigRational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == BigRational(1, 18));
  CHECK(a / b == BigRational(2));
  CHECK(b < a);
  CHECK(intbm::abs(BigRational(-7, 2)) == BigRational(7, 2));
  CHECK(intbm::pow(BigRational(2, 3), 3) == BigRational(8, 27));
  CHECK(intbm::pow(BigRational(2, 3), -2) == BigRational(9, 4));
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(BigRational::parse("-12/8") == BigRational(-3, 2));
  CHECK(BigRational::parse("30") == BigRational(30));
  CHECK_THROWS_AS(BigRational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(BigRational::parse("abc"), std::invalid_argument);
}

TEST_CASE("factorials beyond 64 bits are exact") {
  CHECK(intbm::factorial(0) == 1);
  CHECK(intbm::factorial(20) == mpz_class("2432902008176640000"));
  // 100! has 158 digits and 24 trailing zeros.
  const std::string digits = intbm::factorial(100).get_str();
  CHECK(digits.size() == 158);
  CHECK(digits.substr(digits.size() - 24) == std::string(24, '0'));
  CHECK(BigRational(intbm::factorial(100), intbm::factorial(98)) == BigRational(9900));
}

TEST_CASE("conversion to floating point") {
  CHECK(BigRational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(BigRational(-5, 4).to_long_double() == -1.25L);
}
