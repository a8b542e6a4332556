#pragma once

// Reflected walks: S_j = |S_{j−1} + X_j| (strong) or max{S_{j−1} + X_j, 0}
// (weak), and the law of M_n = max_{j<=n} S_j.

#include <vector>

#include "rwalk/kernels.hpp"
#include "rwalk/power_series.hpp"
#include "rwalk/walk.hpp"

namespace rwalk {

/// Absorbing chain on {0, .., a}: state a absorbs, interior rows carry q at
/// i−1, r at i, p at i+1. Row 0 is (r, p+q) for strong reflection and
/// (q+r, p) for weak. Tridiagonal storage.
class ReflectChain {
 public:
  ReflectChain(int a, const WalkParams& params, Reflection reflection);

  int barrier() const { return a_; }
  Reflection reflection() const { return reflection_; }
  Rational entry(int i, int j) const;

  /// ε'_1 K^n ε_{a+1}: P{the walk from 0 has reached a by time n}. Computed
  /// by n vector–matrix products, never by forming K^n.
  Rational hit_probability(int n) const;

 private:
  int a_;
  Reflection reflection_;
  std::vector<Rational> below_;  // K[i][i-1]
  std::vector<Rational> stay_;   // K[i][i]
  std::vector<Rational> above_;  // K[i][i+1]
};

/// Exact methods switch to float automatically past this horizon.
inline constexpr int kReflectExactMaxN = 512;
inline constexpr int kSeriesMaxN = 32;
/// Barrier sums stop at the first a with P{M_n >= a} below this.
inline constexpr double kReflectTailCutoff = 1e-14;

enum class ReflectMethod { Matrix, Recurrence, Series };

/// Law of M_n for either reflection by the named method. Matrix and
/// Recurrence accept lazy walks; Series needs r = 0, 0 < p and n <= 32.
Pmf reflected_pmf(int n, const WalkParams& params, Reflection reflection,
                  ReflectMethod method);

/// Float law from the matrix method, truncated at kReflectTailCutoff.
Pmf reflected_pmf_float(int n, const WalkParams& params, Reflection reflection,
                        Exec exec = Exec::Parallel);

/// E(M_n), E(M_n²) from tail sums Σ P{M >= a} and Σ (2a−1) P{M >= a}.
Moments reflected_max_moments_float(int n, const WalkParams& params,
                                    Reflection reflection,
                                    Exec exec = Exec::Parallel);

/// Strong reflection.
Pmf strong_pmf_matrix(int n, const WalkParams& params);
Pmf strong_pmf_recurrence(int n, const WalkParams& params);
Pmf strong_pmf_series(int n, const WalkParams& params);

/// F(λ, a, a) = Σ_n λⁿ P{S_n = a, M_n = a}, a >= 0 (a = 0 is the formal
/// continuation used by the a = 1 marginal).
PowerSeries strong_gf_diagonal(int a, int order, const WalkParams& params);
/// F̃(λ, 1, a) = Σ_n λⁿ P{M_n = a}. a = 1 uses λ(1+qλ)/(1−qλ²); a > 1 uses
/// (1/(1−λ))·(2pθ/(θ²+4pq))·[F(λ,a−1,a−1) − F(λ,a,a)].
PowerSeries strong_gf_marginal(int a, int order, const WalkParams& params);

/// Weak reflection.
Pmf weak_pmf_matrix(int n, const WalkParams& params);
Pmf weak_pmf_recurrence(int n, const WalkParams& params);
Pmf weak_pmf_series(int n, const WalkParams& params);

/// G(λ, a, a); a = 0 gives qλ/(1−qλ).
PowerSeries weak_gf_diagonal(int a, int order, const WalkParams& params);
/// G̃(λ, 1, a). a = 0: qλ/(1−qλ); a = 1: pλ/((1−qλ)(1−qλ−pqλ²)); a > 1:
/// (1/(1−λ))·(2pθ/(θ²+4pq))·[G(λ,a−1,a−1) − G(λ,a,a)].
PowerSeries weak_gf_marginal(int a, int order, const WalkParams& params);

/// Reflection implied by a walk mode (StrongReflect or WeakReflect).
Reflection reflection_of(const WalkParams& params);

}  // namespace rwalk
