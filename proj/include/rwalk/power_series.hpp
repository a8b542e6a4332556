#pragma once

#include <vector>

#include "rwalk/rational.hpp"

namespace rwalk {

/// Truncated formal power series in λ with exact coefficients.
///
/// A series of order N knows the coefficients of λ^0 .. λ^N; everything past
/// N is unknown (not zero). Binary operations return the smaller of the two
/// operand orders. divided_by_lambda() loses one order; times_lambda() gains
/// one.
class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(int order);
  /// Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& c, int order);
  /// c·λ^power truncated at `order`.
  static PowerSeries monomial(const Rational& c, int power, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Throws Error(InvalidArgument) when k is negative or beyond the order.
  const Rational& operator[](int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  PowerSeries truncated(int order) const;
  PowerSeries pow(int exponent) const;

  /// Index shift down by one. The constant term must vanish, otherwise
  /// Error(BadConstantTerm): λ is not a unit.
  PowerSeries divided_by_lambda() const;
  PowerSeries times_lambda() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& s);
  friend PowerSeries operator-(const PowerSeries& s);
  friend PowerSeries operator+(const PowerSeries& s, const Rational& c);
  friend PowerSeries operator-(const PowerSeries& s, const Rational& c);

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// q with q·b = a up to min(a.order(), b.order()).
/// Error(ZeroConstantTerm) when b[0] == 0.
PowerSeries series_div(const PowerSeries& a, const PowerSeries& b);

/// r with r² = s and r[0] = 1. Error(BadConstantTerm) unless s[0] == 1.
PowerSeries series_sqrt(const PowerSeries& s);

/// θ(λ) = (1 − sqrt(1 − 4pqλ²)) / λ to the requested order.
///
/// Kept in the normalization θ[1] = 2pq; the rescaled variable θ/2 would
/// tidy the reflected-walk formulas but is not used here.
PowerSeries theta_series(const Rational& p, const Rational& q, int order);

/// The geometric factor 1/(1 − λ).
PowerSeries geometric_series(int order);

}  // namespace rwalk
