#include "rwalk/cycles.hpp"

#include <cmath>

#include "rwalk/error.hpp"

namespace rwalk {

namespace {

// Kahan–Babuška–Neumaier running sum.
class CompensatedSum {
 public:
  void add(long double v) {
    const long double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0;
  long double comp_ = 0;
};

long double ratio_of(const WalkParams& params) { return CycleLaw(params).x().to_long_double(); }

// 1 − P{M_T < k}^n, using P{M_T < k} = 1 − x^{k−1}(1−x)/(1−x^k).
long double record_tail(long double x, int k, std::uint64_t n) {
  const long double xk1 = std::pow(x, static_cast<long double>(k - 1));
  const long double d = xk1 * (1 - x) / (1 - xk1 * x);
  if (d >= 1) return 1;
  return -std::expm1(static_cast<long double>(n) * std::log1p(-d));
}

constexpr long double kCopiesCutoff = 1e-15L;
constexpr int kMaxCycleTerms = 1 << 20;

}  // namespace

CycleLaw::CycleLaw(const WalkParams& params) {
  if (params.is_symmetric()) {
    throw Error(ErrorCode::SymmetricUnsupported, "cycle maximum needs p < q");
  }
  if (params.is_lazy() || params.p().is_zero()) {
    throw Error(ErrorCode::InvalidParams, "cycle maximum needs r = 0 and p > 0");
  }
  x_ = params.p() / params.q();
}

Rational CycleLaw::cdf_below(int k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  return (Rational(1) - x_.pow(k - 1)) / (Rational(1) - x_.pow(k));
}

Rational CycleLaw::pmf_at(int k) const {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  const Rational xk = x_.pow(k);
  const Rational xk1 = xk * x_;
  return (Rational(1) / x_ - Rational(1)) *
         (xk / (Rational(1) - xk) - xk1 / (Rational(1) - xk1));
}

CycleMaxPoint cycle_max_distribution(int k, const WalkParams& params) {
  const CycleLaw law(params);
  CycleMaxPoint point{law.cdf_below(k), law.pmf_at(k)};
  if (point.pmf_at_k != law.cdf_below(k + 1) - point.cdf_below_k) {
    throw Error(ErrorCode::MethodDisagreement, "cycle pmf disagrees with cdf difference");
  }
  return point;
}

CycleMoments cycle_max_moments(const WalkParams& params, long double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const long double x = ratio_of(params);
  CompensatedSum plain, weighted;
  long double xk = 1;
  int k = 1;
  for (; k <= kMaxCycleTerms; ++k) {
    xk *= x;
    const long double term = xk / (1 - xk);
    plain.add(term);
    weighted.add(k * term);
    if (k * term < tol * (1 - x)) break;
  }
  const long double scale = (1 - x) / x;
  return {scale * plain.value(), scale * (2 * weighted.value() - plain.value()), k};
}

long double record_of_copies_mean(std::uint64_t n, const WalkParams& params, CopiesRoute route) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "need at least one copy");
  const long double x = ratio_of(params);
  if (route == CopiesRoute::Auto) {
    route = params.p() == Rational(1, 3) ? CopiesRoute::TailSum : CopiesRoute::PmfWeighted;
  }
  CompensatedSum sum;
  if (route == CopiesRoute::TailSum) {
    for (int k = 1; k <= kMaxCycleTerms; ++k) {
      const long double term = record_tail(x, k, n);
      sum.add(term);
      if (term < kCopiesCutoff) break;
    }
    return sum.value();
  }
  // P{max = k} = P{M_T < k+1}^n − P{M_T < k}^n = tail(k) − tail(k+1).
  long double tail = record_tail(x, 1, n);
  for (int k = 1; k <= kMaxCycleTerms; ++k) {
    const long double next = record_tail(x, k + 1, n);
    sum.add(k * (tail - next));
    tail = next;
    if (k * next < kCopiesCutoff) break;
  }
  return sum.value();
}

long double euler_gamma() {
  constexpr int kN = 10000;
  long double harmonic = 0;
  for (int k = kN; k >= 1; --k) harmonic += 1.0L / k;
  const long double n = kN;
  return harmonic - std::log(n) - 1 / (2 * n) + 1 / (12 * n * n) - 1 / (120 * n * n * n * n);
}

KnuthEstimate knuth_asymptotic(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "knuth estimate needs n >= 2");
  const WalkParams params(Rational(1, 3), Rational(2, 3));
  const long double ln2 = std::log(2.0L);
  const long double base = std::log(static_cast<long double>(n)) / ln2 + euler_gamma() / ln2;
  KnuthEstimate est{};
  est.n = n;
  est.exact_mean = record_of_copies_mean(n, params, CopiesRoute::TailSum);
  est.asymptotic_mean = base + 0.5L;
  est.residual = est.exact_mean - est.asymptotic_mean;
  est.shifted_residual = est.exact_mean - (base - 0.5L);
  return est;
}

}  // namespace rwalk
