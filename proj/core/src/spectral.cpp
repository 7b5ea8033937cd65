#include "intbm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace intbm {
namespace {

// Removes the multiset intersection of a and b from both; inputs sorted.
void cancel_common(std::vector<HalfInteger>& a, std::vector<HalfInteger>& b) {
  std::vector<HalfInteger> keep_a;
  std::vector<HalfInteger> keep_b;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      keep_a.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      keep_b.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  keep_a.insert(keep_a.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  keep_b.insert(keep_b.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  a = std::move(keep_a);
  b = std::move(keep_b);
}

std::vector<HalfInteger> concat(const std::vector<HalfInteger>& a, const std::vector<HalfInteger>& b) {
  std::vector<HalfInteger> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

BigRational product_plus(const std::vector<HalfInteger>& locations, const BigRational& s) {
  BigRational out(1);
  for (const auto& loc : locations) out *= loc.value() + s;
  return out;
}

BigRational product_minus(const std::vector<HalfInteger>& locations, const BigRational& s) {
  BigRational out(1);
  for (const auto& loc : locations) out *= loc.value() - s;
  return out;
}

bool has_repeats(const std::vector<HalfInteger>& sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::vector<HalfInteger> first_locations(unsigned count) {
  std::vector<HalfInteger> out(count);
  for (unsigned k = 0; k < count; ++k) out[k] = HalfInteger{k};
  return out;
}

}  // namespace

HalfInteger HalfInteger::parse(const std::string& text) {
  const auto plus = text.find("+1/2");
  if (plus == std::string::npos || plus == 0 || plus + 4 != text.size())
    throw std::invalid_argument("HalfInteger: expected 'k+1/2', got '" + text + "'");
  const std::string digits = text.substr(0, plus);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("HalfInteger: expected 'k+1/2', got '" + text + "'");
  return HalfInteger{static_cast<unsigned>(std::stoul(digits))};
}

RationalTransfer::RationalTransfer(BigRational gain, std::vector<HalfInteger> plus_zeros,
                                   std::vector<HalfInteger> minus_zeros, std::vector<HalfInteger> plus_poles,
                                   std::vector<HalfInteger> minus_poles)
    : gain_(std::move(gain)),
      plus_zeros_(std::move(plus_zeros)),
      minus_zeros_(std::move(minus_zeros)),
      plus_poles_(std::move(plus_poles)),
      minus_poles_(std::move(minus_poles)) {
  cancel();
}

void RationalTransfer::cancel() {
  for (auto* v : {&plus_zeros_, &minus_zeros_, &plus_poles_, &minus_poles_}) std::sort(v->begin(), v->end());
  cancel_common(plus_zeros_, plus_poles_);
  cancel_common(minus_zeros_, minus_poles_);
  if (gain_.is_zero()) {
    plus_zeros_.clear();
    minus_zeros_.clear();
    plus_poles_.clear();
    minus_poles_.clear();
  }
}

RationalTransfer RationalTransfer::conj() const {
  return RationalTransfer(gain_, minus_zeros_, plus_zeros_, minus_poles_, plus_poles_);
}

BigRational RationalTransfer::numerator_at(const BigRational& s) const {
  return gain_ * product_plus(plus_zeros_, s) * product_minus(minus_zeros_, s);
}

BigRational RationalTransfer::denominator_at(const BigRational& s) const {
  return product_plus(plus_poles_, s) * product_minus(minus_poles_, s);
}

std::complex<double> RationalTransfer::operator()(double v) const {
  const std::complex<double> s(0.0, v);
  std::complex<double> out(gain_.to_double(), 0.0);
  for (const auto& z : plus_zeros_) out *= z.to_double() + s;
  for (const auto& z : minus_zeros_) out *= z.to_double() - s;
  for (const auto& p : plus_poles_) out /= p.to_double() + s;
  for (const auto& p : minus_poles_) out /= p.to_double() - s;
  return out;
}

RationalTransfer operator*(const RationalTransfer& lhs, const RationalTransfer& rhs) {
  return RationalTransfer(lhs.gain_ * rhs.gain_, concat(lhs.plus_zeros_, rhs.plus_zeros_),
                          concat(lhs.minus_zeros_, rhs.minus_zeros_), concat(lhs.plus_poles_, rhs.plus_poles_),
                          concat(lhs.minus_poles_, rhs.minus_poles_));
}

RationalTransfer operator/(const RationalTransfer& lhs, const RationalTransfer& rhs) {
  if (rhs.gain_.is_zero()) throw std::domain_error("RationalTransfer: division by the zero transfer");
  return RationalTransfer(lhs.gain_ / rhs.gain_, concat(lhs.plus_zeros_, rhs.plus_poles_),
                          concat(lhs.minus_zeros_, rhs.minus_poles_), concat(lhs.plus_poles_, rhs.plus_zeros_),
                          concat(lhs.minus_poles_, rhs.minus_zeros_));
}

RationalTransfer operator*(const BigRational& scale, const RationalTransfer& rhs) {
  RationalTransfer out = rhs;
  out.gain_ *= scale;
  out.cancel();
  return out;
}

RationalTransfer transfer_h(unsigned n) { return RationalTransfer(BigRational(1), {}, {}, first_locations(n + 1), {}); }

RationalTransfer transfer_g(unsigned n) {
  if (n == 0) return transfer_h(0);
  return transfer_h(n) / transfer_h(n - 1).conj();
}

RationalTransfer transfer_h_hat(unsigned n) {
  return BigRational(factorial(n), factorial(2 * n)) * transfer_g(n);
}

PartialFractions partial_fractions(const RationalTransfer& f) {
  if (f.degree_gap() < 1) throw std::domain_error("partial_fractions: transfer is not strictly proper");
  if (has_repeats(f.plus_poles()) || has_repeats(f.minus_poles()))
    throw std::domain_error("partial_fractions: repeated pole");

  PartialFractions out;
  const auto& plus = f.plus_poles();
  const auto& minus = f.minus_poles();
  for (std::size_t i = 0; i < plus.size(); ++i) {
    const BigRational s = -plus[i].value();
    BigRational den = product_minus(minus, s);
    for (std::size_t j = 0; j < plus.size(); ++j)
      if (j != i) den *= plus[j].value() + s;
    out.plus.push_back({plus[i], f.numerator_at(s) / den});
  }
  for (std::size_t i = 0; i < minus.size(); ++i) {
    const BigRational s = minus[i].value();
    BigRational den = product_plus(plus, s);
    for (std::size_t j = 0; j < minus.size(); ++j)
      if (j != i) den *= minus[j].value() - s;
    out.minus.push_back({minus[i], f.numerator_at(s) / den});
  }
  return out;
}

BigRational spectral_inner_product(const RationalTransfer& f, const RationalTransfer& g) {
  const RationalTransfer integrand = f * g.conj();
  if (integrand.degree_gap() < 2)
    throw std::domain_error("spectral_inner_product: integrand does not decay like 1/v^2");
  const PartialFractions pf = partial_fractions(integrand);
  // Each 1/(p +- iv) term contributes half its coefficient; the two sums agree when
  // the integrand decays like 1/v^2.
  BigRational total;
  for (const auto& term : pf.plus) total += term.coeff;
  for (const auto& term : pf.minus) total += term.coeff;
  return total / BigRational(2);
}

BigRational sigma_sq(unsigned n) {
  const BigRational ratio(factorial(n), factorial(2 * n));
  return ratio * ratio / BigRational(2 * static_cast<std::int64_t>(n) + 1);
}

double impulse_response(unsigned n, double t) {
  if (t < 0.0) return 0.0;
  const double inv_n_factorial = 1.0 / std::tgamma(static_cast<double>(n) + 1.0);
  return inv_n_factorial * std::exp(-0.5 * t) * std::pow(-std::expm1(-t), static_cast<double>(n));
}

CorrelationExpansion::CorrelationExpansion(std::vector<CorrelationTerm> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.rate < b.rate; });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].rate == terms_[i - 1].rate) throw std::invalid_argument("CorrelationExpansion: repeated rate");
}

double CorrelationExpansion::operator()(double tau) const {
  const double lag = std::abs(tau);
  double out = 0.0;
  for (const auto& term : terms_) out += term.coeff.to_double() * std::exp(-term.rate.to_double() * lag);
  return out;
}

BigRational CorrelationExpansion::at_zero() const {
  BigRational out;
  for (const auto& term : terms_) out += term.coeff;
  return out;
}

CrossCorrelation cross_correlation(unsigned j, unsigned k) {
  const PartialFractions pf = partial_fractions(transfer_h(j) * transfer_h(k).conj());
  auto to_terms = [](const std::vector<PartialFractionTerm>& in) {
    std::vector<CorrelationTerm> out;
    out.reserve(in.size());
    for (const auto& t : in) out.push_back({t.coeff, t.location});
    return CorrelationExpansion(std::move(out));
  };
  return CrossCorrelation{j, k, to_terms(pf.plus), to_terms(pf.minus)};
}

}  // namespace intbm
