#pragma once

#include <optional>

#include "rwalk/walk.hpp"

namespace rwalk {

enum class Regime {
  SymmetricPlainMax,
  SymmetricPlainCross,
  AsymmetricPlainMax,
  AsymmetricPlainMin,
  AsymmetricPlainCross,
  ReflectedSymmetric,
  LazyReflected,
  TrafficLight,
  PersistentSymmetric,
};

/// Leading-order predictors of the extreme-value moments, evaluated at n.
/// These are asymptotic formulas, not exact values; variance is reported as
/// second_moment − mean² except where only the variance is known (persistent
/// walk), in which case second_moment is reconstructed from it.
///
/// Cross regimes fill cross_moment; their mean/second_moment describe M_n⁺.
/// Error(RegimeMismatch) when params do not fit the regime (asymmetric
/// regimes need p < q and r = 0, symmetric ones p = q, LazyReflected needs
/// r > 0, PersistentSymmetric needs 0 < alpha < 1).
Moments predict_moments(Regime regime, int n, const WalkParams& params,
                        std::optional<double> persistent_alpha = std::nullopt);

/// Catalan's constant Σ (−1)^k / (2k+1)² to within tol (tol >= 1e-14).
///
/// Iterated pairwise averaging of consecutive partial sums (Euler's
/// transformation of the alternating tail); the plain partial sums would need
/// ~10^7 terms for 1e-14.
long double catalan_constant(long double tol = 1e-14L);

/// Partial sum Σ_{k<K} (−1)^k / (2k+1)². Consecutive values bracket G.
long double catalan_partial_sum(int terms);

enum class ProbeScenario { Strong, Weak };

/// sqrt(2/π)·t·Σ_{a>=1} sech(arg) with arg = a·t (strong) or (a+1/2)·t
/// (weak); tends to sqrt(π/2) as t → 0⁺. Requires 0 < t <= 1.
double sech_limit_probe(double t, ProbeScenario scenario);

/// t·Σ_{a>=1} arg·sech(arg), a Riemann sum for ∫₀^∞ b sech(b) db = 2G.
double second_moment_probe(double t, ProbeScenario scenario);

}  // namespace rwalk
