#pragma once

#include <complex>
#include <string>
#include <vector>

#include "intbm/big_rational.hpp"

namespace intbm {

/// A location k + 1/2, k >= 0, where every pole and zero of the transfer
/// functions in this library sits.
struct HalfInteger {
  unsigned k = 0;

  BigRational value() const { return BigRational(2 * static_cast<std::int64_t>(k) + 1, 2); }
  double to_double() const { return static_cast<double>(k) + 0.5; }
  /// "k+1/2"
  std::string to_string() const { return std::to_string(k) + "+1/2"; }
  static HalfInteger parse(const std::string& text);

  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

/// Rational function of the spectral variable v, written in s = iv as
///
///   gain * prod (a + s) * prod (b - s) / ( prod (c + s) * prod (d - s) )
///
/// with every a, b, c, d a HalfInteger. Factors (c + s) vanish in the upper
/// half v-plane (causal poles); (d - s) factors appear after conjugation.
/// Common factors are cancelled on construction, so the multisets are disjoint.
class RationalTransfer {
 public:
  RationalTransfer() : gain_(1) {}
  RationalTransfer(BigRational gain, std::vector<HalfInteger> plus_zeros, std::vector<HalfInteger> minus_zeros,
                   std::vector<HalfInteger> plus_poles, std::vector<HalfInteger> minus_poles);

  const BigRational& gain() const { return gain_; }
  const std::vector<HalfInteger>& plus_zeros() const { return plus_zeros_; }
  /// Factors (k+1/2 - iv) in the numerator.
  const std::vector<HalfInteger>& minus_zeros() const { return minus_zeros_; }
  /// Factors (k+1/2 + iv) in the denominator.
  const std::vector<HalfInteger>& plus_poles() const { return plus_poles_; }
  const std::vector<HalfInteger>& minus_poles() const { return minus_poles_; }

  int numerator_degree() const { return static_cast<int>(plus_zeros_.size() + minus_zeros_.size()); }
  int denominator_degree() const { return static_cast<int>(plus_poles_.size() + minus_poles_.size()); }
  int degree_gap() const { return denominator_degree() - numerator_degree(); }

  /// Complex conjugate for real v: s -> -s.
  RationalTransfer conj() const;

  /// gain * numerator factors at s, exactly.
  BigRational numerator_at(const BigRational& s) const;
  /// Denominator factors at s, exactly.
  BigRational denominator_at(const BigRational& s) const;

  std::complex<double> operator()(double v) const;

  friend RationalTransfer operator*(const RationalTransfer& lhs, const RationalTransfer& rhs);
  friend RationalTransfer operator/(const RationalTransfer& lhs, const RationalTransfer& rhs);
  friend RationalTransfer operator*(const BigRational& scale, const RationalTransfer& rhs);
  friend bool operator==(const RationalTransfer&, const RationalTransfer&) = default;

 private:
  void cancel();

  BigRational gain_;
  std::vector<HalfInteger> plus_zeros_;
  std::vector<HalfInteger> minus_zeros_;
  std::vector<HalfInteger> plus_poles_;
  std::vector<HalfInteger> minus_poles_;
};

/// H_n(v) = prod_{k=0}^{n} 1/(k+1/2+iv), the filter taking white noise to X_n.
RationalTransfer transfer_h(unsigned n);
/// G_n(v) = H_n(v) / conj(H_{n-1}(v)); G_0 = H_0.
RationalTransfer transfer_g(unsigned n);
/// Innovation filter (n!/(2n)!) G_n(v).
RationalTransfer transfer_h_hat(unsigned n);

struct PartialFractionTerm {
  HalfInteger location;
  BigRational coeff;

  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

/// F(s) = sum plus[i].coeff/(loc + s) + sum minus[i].coeff/(loc - s).
struct PartialFractions {
  std::vector<PartialFractionTerm> plus;
  std::vector<PartialFractionTerm> minus;
};

/// Exact expansion of a strictly proper transfer with simple poles.
/// Throws std::domain_error for a repeated pole or a non-proper transfer.
PartialFractions partial_fractions(const RationalTransfer& f);

/// (1/2pi) \int F(v) conj(G(v)) dv, exactly, from the residues of F conj(G).
/// Throws std::domain_error unless the product decays at least like 1/v^2.
BigRational spectral_inner_product(const RationalTransfer& f, const RationalTransfer& g);

/// Innovation variance (n!/(2n)!)^2 / (2n+1).
BigRational sigma_sq(unsigned n);

/// h_n(t) = e^{-t/2} (1 - e^{-t})^n / n! for t >= 0, else 0.
double impulse_response(unsigned n, double t);

struct CorrelationTerm {
  BigRational coeff;
  HalfInteger rate;

  friend bool operator==(const CorrelationTerm&, const CorrelationTerm&) = default;
};

/// sum coeff_m * exp(-rate_m |tau|).
class CorrelationExpansion {
 public:
  CorrelationExpansion() = default;
  explicit CorrelationExpansion(std::vector<CorrelationTerm> terms);

  const std::vector<CorrelationTerm>& terms() const { return terms_; }
  double operator()(double tau) const;
  BigRational at_zero() const;

  friend bool operator==(const CorrelationExpansion&, const CorrelationExpansion&) = default;

 private:
  std::vector<CorrelationTerm> terms_;
};

/// E X_j(t) X_k(t - tau) as two one-sided expansions.
struct CrossCorrelation {
  unsigned j = 0;
  unsigned k = 0;
  CorrelationExpansion nonnegative_lag;  // tau >= 0
  CorrelationExpansion nonpositive_lag;  // tau <= 0, evaluated at |tau|

  double operator()(double tau) const { return tau >= 0 ? nonnegative_lag(tau) : nonpositive_lag(tau); }
};

CrossCorrelation cross_correlation(unsigned j, unsigned k);

}  // namespace intbm
