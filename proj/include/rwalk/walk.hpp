#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rwalk/rational.hpp"

namespace rwalk {

enum class Mode { Plain, StrongReflect, WeakReflect, TrafficLight };

enum class Arithmetic { Exact, Float };

std::string to_string(Mode mode);

/// Step law P{+1} = p, P{-1} = q, P{0} = r together with the reflection mode.
///
/// The checked constructor requires p + q + r = 1, all components in [0, 1]
/// and p <= q. Walks with upward drift have no closed forms here; mirror them
/// by a sign flip. unrestricted() drops the p <= q requirement for simulation.
class WalkParams {
 public:
  WalkParams(Rational p, Rational q, Rational r = 0, Mode mode = Mode::Plain);

  static WalkParams unrestricted(Rational p, Rational q, Rational r = 0,
                                 Mode mode = Mode::Plain);
  static WalkParams symmetric(Mode mode = Mode::Plain);
  /// −1 at times divisible by 3, otherwise +1 or 0 with probability 1/2.
  /// p, q, r are set to the overall 1/3 frequencies and otherwise ignored.
  static WalkParams traffic_light();

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& r() const { return r_; }
  Mode mode() const { return mode_; }

  bool is_symmetric() const { return p_ == q_; }
  bool is_lazy() const { return !r_.is_zero(); }
  WalkParams with_mode(Mode mode) const;

  friend bool operator==(const WalkParams&, const WalkParams&) = default;

 private:
  struct Unchecked {};
  WalkParams(Unchecked, Rational p, Rational q, Rational r, Mode mode);

  Rational p_;
  Rational q_;
  Rational r_;
  Mode mode_;
};

/// Finite distribution on the integers, either exact or double precision.
/// Only points of positive probability are stored, sorted by value.
class Pmf {
 public:
  /// Throws Error(InvalidArgument) unless the masses are >= 0 and sum to 1.
  static Pmf exact(const std::map<std::int64_t, Rational>& masses);
  /// Masses must sum to 1 within 1e-12. Round-off negatives above -1e-15
  /// are clamped to zero; anything more negative is rejected.
  static Pmf approx(const std::map<std::int64_t, double>& masses);

  bool is_exact() const { return exact_.has_value(); }
  const std::vector<std::int64_t>& support() const { return support_; }
  const std::vector<double>& probabilities() const { return approx_; }
  /// Throws Error(InvalidArgument) for a float pmf.
  const std::vector<Rational>& exact_probabilities() const;

  double at(std::int64_t value) const;
  Rational exact_at(std::int64_t value) const;
  /// P{X >= value}.
  Rational exact_tail(std::int64_t value) const;
  double tail(std::int64_t value) const;

  std::int64_t min_value() const { return support_.front(); }
  std::int64_t max_value() const { return support_.back(); }

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  Pmf() = default;
  std::vector<std::int64_t> support_;
  std::vector<double> approx_;
  std::optional<std::vector<Rational>> exact_;
};

/// Exact law of (M_n⁺, M_n⁻) at time n.
class JointPmf {
 public:
  using Key = std::pair<int, int>;

  /// Validates 0 <= a, b <= n, nonnegative masses and total mass 1.
  /// P{(0,0)} = rⁿ, so it vanishes for n >= 1 only when r = 0.
  JointPmf(int n, const std::map<Key, Rational>& entries);

  int n() const { return n_; }
  const std::map<Key, Rational>& entries() const { return entries_; }
  Rational at(int a, int b) const;

  Pmf marginal_plus() const;
  Pmf marginal_minus() const;
  /// Σ a·b·P{(a, b)}.
  Rational cross_moment() const;

  friend bool operator==(const JointPmf&, const JointPmf&) = default;

 private:
  int n_;
  std::map<Key, Rational> entries_;
};

struct ExactMoments {
  Rational mean;
  Rational second_moment;
  Rational variance;
};

struct Moments {
  double mean = 0;
  double second_moment = 0;
  double variance = 0;
  std::optional<double> cross_moment;
  std::optional<ExactMoments> exact;
};

Moments pmf_moments(const Pmf& pmf);

/// P{lo < S_j < hi for all j <= n} for the plain walk started at 0, by a
/// forward tridiagonal DP. Error(BadBand) unless lo < 0 < hi.
Rational band_stay_exact(int n, int lo, int hi, const WalkParams& params);
double band_stay_float(int n, int lo, int hi, const WalkParams& params);

using Probability = std::variant<Rational, double>;
Probability band_stay_probability(int n, int lo, int hi, const WalkParams& params,
                                  Arithmetic arithmetic);
double to_double(const Probability& prob);

/// First-order stochastic dominance: P{upper >= a} >= P{lower >= a} for all a.
bool dominates(const Pmf& upper, const Pmf& lower);

}  // namespace rwalk
