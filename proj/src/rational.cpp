#include "rwalk/rational.hpp"

#include <cstdlib>
#include <ostream>

#include "rwalk/error.hpp"

namespace rwalk {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    const char c = s[i];
    ok = (c >= '0' && c <= '9') || (i == 0 && (c == '-' || c == '+') && s.size() > 1);
  }
  if (!ok) {
    throw Error(ErrorCode::InvalidArgument,
                "not an exact rational (expected N or N/D): '" + std::string(whole) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  return Rational(parse_integer(text.substr(0, slash), text),
                  parse_integer(text.substr(slash + 1), text));
}

long double Rational::to_long_double() const {
  mpf_class f(v_, 128);
  mp_exp_t exp = 0;
  const std::string digits = f.get_str(exp, 10, 30);
  if (digits.empty()) return 0.0L;
  // digits carry an optional leading '-', then the mantissa "d1d2..." = 0.d1d2... × 10^exp.
  const bool neg = digits[0] == '-';
  const std::string mant = neg ? digits.substr(1) : digits;
  const std::string lit = std::string(neg ? "-" : "") + "0." + mant + "e" + std::to_string(exp);
  return std::strtold(lit.c_str(), nullptr);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return Rational(1) / pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r;
  r.v_ = mpq_class(num, den);  // powers of coprime integers stay coprime
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt binom(long n, long k) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "binom requires n >= 0");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace rwalk
