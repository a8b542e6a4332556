#pragma once

#include <optional>
#include <vector>

#include "rwalk/rational.hpp"
#include "rwalk/walk.hpp"

namespace rwalk {

/// First-exit law of the band (−b, a) at time n, split by the side of exit.
struct ExitLawTerms {
  int n;
  int a;
  int b;
  Rational f_value;  // exit through a
  Rational g_value;  // exit through −b
  Rational psi_value;
};

/// (j/n)·C(n,h)·C(n−h,h+j)·(pq)^h with h = (n−j)/2, so that p^j·C is the
/// probability of first reaching +j at time n. Zero unless 1 <= j <= n and
/// n − j is even. Plain walks with r = 0 only.
Rational first_passage_C(int n, int j, const WalkParams& params);

/// ψ(n, a, b) = P{first exit from (−b, a) happens at time n}.
///
/// Reflection-image sums: f = p^a Σ_k [(pq)^{(a+b)k} C(n, 2(a+b)k+a)
/// − (pq)^{(a+b)k+b} C(n, 2(a+b)k+a+2b)] and g symmetrically. Requires
/// n >= 1, a, b >= 0, (a, b) != (0, 0).
ExitLawTerms exit_probability_psi(int n, int a, int b, const WalkParams& params);

/// The exit law with the image weight printed as (pq)^b instead of
/// (pq)^{(a+b)k+b}. Disagrees with enumeration once a k >= 1 image enters;
/// kept only so tests can pin the discrepancy.
ExitLawTerms exit_probability_psi_as_printed(int n, int a, int b,
                                             const WalkParams& params);

/// φ(n, a, b) = P{M_n⁺ = a, M_n⁻ = b} from the ψ recurrence
///   φ(n+1,a,b) = φ(n,a,b) − ψ(n+1,a+1,b+1) − ψ(n+1,a,b)
///              + ψ(n+1,a+1,b) + ψ(n+1,a,b+1).
/// Plain walk, r = 0.
JointPmf joint_pmf(int n, const WalkParams& params);

/// Same table by inclusion–exclusion over band-stay probabilities; handles
/// lazy walks.
JointPmf joint_pmf_band(int n, const WalkParams& params);

enum class Side { Plus, Minus };

/// Marginal law of M_n⁺ (or M_n⁻) from the reflection formula
///   ω̂(n,c,x,y) = Σ_{k=c}^{n} [1 + (y/x)^{k−c}] C(n,(n+k)/2) x^{(n+k)/2} y^{(n−k)/2}
///               − C(n,(n+c)/2) x^{(n+c)/2} y^{(n−c)/2}
/// which equals P{M_n⁺ >= c}; P{M = a} = ω̂(a) − ω̂(a+1). The subtracted term
/// removes the double-counted k = c summand. r = 0 only.
Pmf marginal_max_pmf(int n, Side side, const WalkParams& params);

/// ω(n,a) − ω(n,a+1) without the k = c correction; not a distribution.
/// Test-only witness of the double counting.
std::vector<Rational> marginal_max_masses_uncorrected(int n, Side side,
                                                      const WalkParams& params);

/// Marginal law through band-stay probabilities (any r, exact or float).
Pmf marginal_max_pmf_band(int n, Side side, const WalkParams& params,
                          Arithmetic arithmetic);

/// Symmetric case: P{M_n⁺ = k} = C(n, ⌊(n−k)/2⌋) / 2ⁿ.
Pmf symmetric_max_pmf(int n);

/// ξ_k, η_k for k <= n_max: coefficients of
///   (−1 + 2x + sqrt(1 − 4x²)) / (2(1 − 2x)²),  (1 + 2y − sqrt(1 − 4y²)) / (2(1 − 2y)²)
/// so that E(M_k⁺) = ξ_k / 2^k and E((M_k⁺)²) = η_k / 2^k at p = 1/2.
struct SymmetricMaxSeries {
  std::vector<BigInt> xi;
  std::vector<BigInt> eta;
};
SymmetricMaxSeries symmetric_max_series(int n_max);

Rational symmetric_max_mean(int n);
Rational symmetric_max_second_moment(int n);

/// Law of max_{j<=n} |S_j|: P{= a} = H(n, −(a+1), a+1) − H(n, −a, a).
Pmf max_abs_pmf(int n, const WalkParams& params, Arithmetic arithmetic);

enum class CrossMethod { BandDP, MonteCarlo };

struct CrossMomentOptions {
  Arithmetic arithmetic = Arithmetic::Float;
  std::uint64_t trials = 100000;  // MonteCarlo only
  std::uint64_t seed = 1;         // MonteCarlo only
};

inline constexpr int kCrossMomentBandMaxN = 512;

/// E(M_n⁺ M_n⁻) = Σ_{a,b>=1} [1 − P{M⁺<a} − P{M⁻<b} + H(n, −b, a)].
/// BandDP: Error(TooLarge) for n > 512. The float path drops (a, b) terms
/// once the marginal tails fall below 1e-15.
double cross_moment(int n, const WalkParams& params, CrossMethod method,
                    const CrossMomentOptions& options = {});
Rational cross_moment_exact(int n, const WalkParams& params);

}  // namespace rwalk
