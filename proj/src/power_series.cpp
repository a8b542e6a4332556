#include "rwalk/power_series.hpp"

#include <algorithm>
#include <string>

#include "rwalk/error.hpp"

namespace rwalk {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, int power, int order) {
  PowerSeries s(order);
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial power");
  if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
  return s;
}

const Rational& PowerSeries::operator[](int k) const {
  if (k < 0 || k > order()) {
    throw Error(ErrorCode::InvalidArgument,
                "coefficient " + std::to_string(k) + " beyond series order " +
                    std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order()) {
    throw Error(ErrorCode::InvalidArgument, "cannot extend a truncated series");
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative series power");
  PowerSeries result = constant(1, order());
  PowerSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::divided_by_lambda() const {
  if (!coeffs_[0].is_zero()) {
    throw Error(ErrorCode::BadConstantTerm, "dividing by λ needs a zero constant term");
  }
  if (order() == 0) throw Error(ErrorCode::InvalidArgument, "order-0 series cannot lose an order");
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries PowerSeries::times_lambda() const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (int k = 0; k <= n; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (int k = 0; k <= n; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

PowerSeries operator*(const Rational& c, const PowerSeries& s) {
  PowerSeries out = s;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

PowerSeries operator-(const PowerSeries& s) { return Rational(-1) * s; }

PowerSeries operator+(const PowerSeries& s, const Rational& c) {
  PowerSeries out = s;
  out.coeffs_[0] += c;
  return out;
}

PowerSeries operator-(const PowerSeries& s, const Rational& c) { return s + (-c); }

PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) {
  const Rational& b0 = b[0];
  if (b0.is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "series divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (int i = 0; i < k; ++i) {
      if (!q[i].is_zero() && !b[k - i].is_zero()) acc -= q[i] * b[k - i];
    }
    q[k] = acc / b0;
  }
  return PowerSeries(std::move(q));
}

PowerSeries series_sqrt(const PowerSeries& s) {
  if (s[0] != Rational(1)) {
    throw Error(ErrorCode::BadConstantTerm, "series_sqrt needs constant term 1");
  }
  const int n = s.order();
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1;
  // 2 r_0 r_k = s_k − Σ_{0<i<k} r_i r_{k−i}
  for (int k = 1; k <= n; ++k) {
    Rational acc = s[k];
    for (int i = 1; i < k; ++i) acc -= r[i] * r[k - i];
    r[k] = acc / Rational(2);
  }
  return PowerSeries(std::move(r));
}

PowerSeries theta_series(const Rational& p, const Rational& q, int order) {
  if (!(p > Rational(0)) || !(q > Rational(0)) || p + q != Rational(1)) {
    throw Error(ErrorCode::InvalidParams, "theta needs 0 < p, 0 < q, p + q = 1");
  }
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "theta order must be >= 1");
  const int inner = order + 1;
  const PowerSeries radicand = PowerSeries::constant(1, inner) +
                               PowerSeries::monomial(Rational(-4) * p * q, 2, inner);
  const PowerSeries numerator = PowerSeries::constant(1, inner) - series_sqrt(radicand);
  return numerator.divided_by_lambda();
}

PowerSeries geometric_series(int order) {
  return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(1)));
}

}  // namespace rwalk
