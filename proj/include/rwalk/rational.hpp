#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rwalk {

using BigInt = mpz_class;

/// Exact fraction backed by GMP. Always held in canonical form: the
/// denominator is positive and coprime to the numerator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& value) : v_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error(InvalidArgument) when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "N", "-N" or "N/D". Decimal points are rejected.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  /// Correctly rounded to long double (goes through a 128-bit mantissa).
  long double to_long_double() const;

  /// "N/D", or "N" when the denominator is 1.
  std::string to_string() const;

  Rational pow(int exponent) const;
  Rational abs() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binom(long n, long k);

}  // namespace rwalk
