#include "intbm/big_rational.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace intbm {

BigRational::BigRational(std::int64_t value) : value_(static_cast<long>(value)) {}

BigRational::BigRational(std::int64_t numerator, std::int64_t denominator)
    : BigRational(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))) {}

BigRational::BigRational(const mpz_class& integer) : value_(integer) {}

BigRational::BigRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return BigRational(mpz_class(std::string(text), 10));
    return BigRational(mpz_class(std::string(text.substr(0, slash)), 10),
                       mpz_class(std::string(text.substr(slash + 1)), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("BigRational: cannot parse '" + std::string(text) + "'");
  }
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational out;
  out.value_ = -value_;
  return out;
}

bool operator==(const BigRational& lhs, const BigRational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }

std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool BigRational::is_integer() const { return value_.get_den() == 1; }

double BigRational::to_double() const { return value_.get_d(); }

long double BigRational::to_long_double() const {
  // Scale numerator and denominator into range separately; mpz_get_d_2exp keeps 53 bits
  // of each, so split the numerator into a high and a low part to retain 64 bits.
  auto to_ld = [](const mpz_class& z) {
    if (z == 0) return 0.0L;
    const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    const long shift = bits > 64 ? static_cast<long>(bits - 64) : 0;
    mpz_class top = z >> shift;  // |top| < 2^64
    mpz_class hi = top >> 32;
    mpz_class lo = top - (hi << 32);
    const long double v = std::ldexp(static_cast<long double>(hi.get_d()), 32) +
                          static_cast<long double>(lo.get_d());
    return std::ldexp(v, static_cast<int>(shift));
  };
  return to_ld(value_.get_num()) / to_ld(value_.get_den());
}

std::string BigRational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational abs(const BigRational& value) { return value.sign() < 0 ? -value : value; }

BigRational pow(const BigRational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("BigRational: zero to a negative power");
    return BigRational(1) / pow(base, -exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.to_string(); }

const mpz_class& factorial(unsigned n) {
  // std::deque never relocates existing elements, so returned references stay valid.
  static std::mutex mutex;
  static std::deque<mpz_class> cache{mpz_class(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const auto k = static_cast<unsigned long>(cache.size());
    cache.push_back(cache.back() * k);
  }
  return cache[n];
}

}  // namespace intbm
