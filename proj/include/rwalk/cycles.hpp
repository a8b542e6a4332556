#pragma once

#include <cstdint>

#include "rwalk/rational.hpp"
#include "rwalk/walk.hpp"

namespace rwalk {

/// Excursion maximum M_T of a downward-biased walk (p < q, r = 0), where T is
/// the first return time to 0, conditioned on T < ∞. Parameterized by
/// x = p/q in (0, 1): P{M_T < k} = (1 − x^{k−1}) / (1 − x^k).
class CycleLaw {
 public:
  /// Error(SymmetricUnsupported) when p == q.
  explicit CycleLaw(const WalkParams& params);

  const Rational& x() const { return x_; }
  Rational cdf_below(int k) const;
  Rational pmf_at(int k) const;

 private:
  Rational x_;
};

struct CycleMaxPoint {
  Rational cdf_below_k;
  Rational pmf_at_k;
};

/// P{M_T < k} and P{M_T = k}; the latter from (1/x − 1)(x^k/(1−x^k) −
/// x^{k+1}/(1−x^{k+1})), checked against the cdf difference.
CycleMaxPoint cycle_max_distribution(int k, const WalkParams& params);

struct CycleMoments {
  long double mean;
  long double second_moment;
  int terms;
};

/// E(M_T) = ((1−x)/x) Σ x^k/(1−x^k), E(M_T²) = ((1−x)/x)(2 Σ k x^k/(1−x^k)
/// − Σ x^k/(1−x^k)), summed in increasing k with compensated addition until
/// the term drops below tol·(1−x).
CycleMoments cycle_max_moments(const WalkParams& params, long double tol = 1e-18L);

enum class CopiesRoute { Auto, TailSum, PmfWeighted };

/// E of the largest of n independent copies of M_T.
///   TailSum:     Σ_k [1 − P{M_T < k}^n]
///   PmfWeighted: Σ_k k [P{M_T < k+1}^n − P{M_T < k}^n]
/// Auto picks TailSum at p = 1/3 and PmfWeighted otherwise.
long double record_of_copies_mean(std::uint64_t n, const WalkParams& params,
                                  CopiesRoute route = CopiesRoute::Auto);

/// Euler's constant from H_N − ln N − 1/(2N) + 1/(12N²) − 1/(120N⁴) at N = 10⁴,
/// accurate well past 1e-12.
long double euler_gamma();

struct KnuthEstimate {
  std::uint64_t n;
  long double exact_mean;
  /// log2 n + γ/ln 2 + 1/2.
  long double asymptotic_mean;
  long double residual;
  /// exact_mean − (log2 n + γ/ln 2 − 1/2): the sum over k >= 1 starts one
  /// index later than the j >= 0 trie sum, which drops its j = 0 term of 1.
  long double shifted_residual;
};

/// p = 1/3 regime; n >= 2.
KnuthEstimate knuth_asymptotic(std::uint64_t n);

}  // namespace rwalk
