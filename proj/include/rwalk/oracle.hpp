#pragma once

#include <variant>

#include "rwalk/walk.hpp"

namespace rwalk {

enum class WalkStatistic { Max, AbsMin, JointMaxMin, MaxAbs, ReflectedMax, CycleMax };

/// Largest horizons the enumerator accepts.
inline constexpr int kOracleMaxBinary = 16;
inline constexpr int kOracleMaxTernary = 10;

using OracleResult = std::variant<Pmf, JointPmf>;

/// Ground truth by brute force: every step sequence of length n is visited in
/// lexicographic order (+1 < −1 < 0), weighted by p^#up q^#down r^#zero, and
/// the statistic is evaluated on the realized path.
///
/// ReflectedMax needs a StrongReflect, WeakReflect or TrafficLight walk; the
/// other statistics need Plain. CycleMax keeps only paths that return to 0
/// within the horizon and renormalizes over them, so its value at finite n is
/// the law of M_T conditioned on T <= n.
///
/// Error(TooLarge) past kOracleMaxBinary (or kOracleMaxTernary when r > 0).
OracleResult enumerate_exact(int n, const WalkParams& params, WalkStatistic stat);

Pmf enumerate_pmf(int n, const WalkParams& params, WalkStatistic stat);
JointPmf enumerate_joint(int n, const WalkParams& params);

}  // namespace rwalk
