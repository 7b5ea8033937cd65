#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace intbm {

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t numerator, std::int64_t denominator);
  explicit BigRational(const mpz_class& integer);
  BigRational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "p/q" or "p" (decimal, optional leading '-').
  static BigRational parse(std::string_view text);

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs);
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  /// Nearest-ish double (GMP truncation, at most one ulp off).
  double to_double() const;
  long double to_long_double() const;

  /// Always "num/den", including integers ("9/1").
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

BigRational abs(const BigRational& value);
/// value^exponent for any integer exponent; throws std::domain_error for 0^negative.
BigRational pow(const BigRational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& value);

/// n! as an exact integer. Values are memoized for the lifetime of the process.
const mpz_class& factorial(unsigned n);

}  // namespace intbm
