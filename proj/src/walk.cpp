#include "rwalk/walk.hpp"

#include <cmath>
#include <string>

#include "rwalk/error.hpp"

namespace rwalk {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Plain: return "plain";
    case Mode::StrongReflect: return "strong";
    case Mode::WeakReflect: return "weak";
    case Mode::TrafficLight: return "traffic";
  }
  return "unknown";
}

namespace {

void check_law(const Rational& p, const Rational& q, const Rational& r) {
  const Rational zero(0), one(1);
  for (const Rational* x : {&p, &q, &r}) {
    if (*x < zero || *x > one) {
      throw Error(ErrorCode::InvalidParams, "step probabilities must lie in [0, 1]");
    }
  }
  if (p + q + r != one) {
    throw Error(ErrorCode::InvalidParams,
                "p + q + r must equal 1 exactly (got " + (p + q + r).to_string() + ")");
  }
}

}  // namespace

WalkParams::WalkParams(Unchecked, Rational p, Rational q, Rational r, Mode mode)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), mode_(mode) {
  check_law(p_, q_, r_);
}

WalkParams::WalkParams(Rational p, Rational q, Rational r, Mode mode)
    : WalkParams(Unchecked{}, std::move(p), std::move(q), std::move(r), mode) {
  if (p_ > q_) {
    throw Error(ErrorCode::InvalidParams,
                "p > q is not supported; mirror the walk so that p <= q");
  }
}

WalkParams WalkParams::unrestricted(Rational p, Rational q, Rational r, Mode mode) {
  return WalkParams(Unchecked{}, std::move(p), std::move(q), std::move(r), mode);
}

WalkParams WalkParams::symmetric(Mode mode) {
  return WalkParams(Rational(1, 2), Rational(1, 2), 0, mode);
}

WalkParams WalkParams::traffic_light() {
  return WalkParams(Rational(1, 3), Rational(1, 3), Rational(1, 3), Mode::TrafficLight);
}

WalkParams WalkParams::with_mode(Mode mode) const {
  WalkParams out = *this;
  out.mode_ = mode;
  return out;
}

// ---------------------------------------------------------------- Pmf

Pmf Pmf::exact(const std::map<std::int64_t, Rational>& masses) {
  Pmf out;
  std::vector<Rational> probs;
  Rational total(0);
  for (const auto& [value, mass] : masses) {
    if (mass < Rational(0)) {
      throw Error(ErrorCode::InvalidArgument,
                  "negative mass " + mass.to_string() + " at " + std::to_string(value));
    }
    total += mass;
    if (mass.is_zero()) continue;
    out.support_.push_back(value);
    out.approx_.push_back(mass.to_double());
    probs.push_back(mass);
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "pmf masses sum to " + total.to_string() + ", not 1");
  }
  out.exact_ = std::move(probs);
  return out;
}

Pmf Pmf::approx(const std::map<std::int64_t, double>& masses) {
  Pmf out;
  double total = 0;
  for (auto [value, mass] : masses) {
    if (!std::isfinite(mass) || mass < -1e-15) {
      throw Error(ErrorCode::InvalidArgument,
                  "invalid mass " + std::to_string(mass) + " at " + std::to_string(value));
    }
    if (mass <= 0) continue;
    total += mass;
    out.support_.push_back(value);
    out.approx_.push_back(mass);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "float pmf sums to " + std::to_string(total));
  }
  return out;
}

const std::vector<Rational>& Pmf::exact_probabilities() const {
  if (!exact_) throw Error(ErrorCode::InvalidArgument, "pmf is not exact");
  return *exact_;
}

double Pmf::at(std::int64_t value) const {
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] == value) return approx_[i];
  }
  return 0.0;
}

Rational Pmf::exact_at(std::int64_t value) const {
  const auto& probs = exact_probabilities();
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] == value) return probs[i];
  }
  return 0;
}

Rational Pmf::exact_tail(std::int64_t value) const {
  const auto& probs = exact_probabilities();
  Rational total(0);
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] >= value) total += probs[i];
  }
  return total;
}

double Pmf::tail(std::int64_t value) const {
  if (exact_) return exact_tail(value).to_double();
  double total = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] >= value) total += approx_[i];
  }
  return total;
}

// ---------------------------------------------------------------- JointPmf

JointPmf::JointPmf(int n, const std::map<Key, Rational>& entries) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  Rational total(0);
  for (const auto& [key, mass] : entries) {
    const auto [a, b] = key;
    if (a < 0 || b < 0 || a > n || b > n) {
      throw Error(ErrorCode::InvalidArgument, "joint pmf key out of range");
    }
    if (mass < Rational(0)) throw Error(ErrorCode::InvalidArgument, "negative joint mass");
    if (mass.is_zero()) continue;
    total += mass;
    entries_.emplace(key, mass);
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "joint masses sum to " + total.to_string());
  }
}

Rational JointPmf::at(int a, int b) const {
  const auto it = entries_.find({a, b});
  return it == entries_.end() ? Rational(0) : it->second;
}

Pmf JointPmf::marginal_plus() const {
  std::map<std::int64_t, Rational> m;
  for (const auto& [key, mass] : entries_) m[key.first] += mass;
  return Pmf::exact(m);
}

Pmf JointPmf::marginal_minus() const {
  std::map<std::int64_t, Rational> m;
  for (const auto& [key, mass] : entries_) m[key.second] += mass;
  return Pmf::exact(m);
}

Rational JointPmf::cross_moment() const {
  Rational total(0);
  for (const auto& [key, mass] : entries_) total += Rational(key.first * key.second) * mass;
  return total;
}

// ---------------------------------------------------------------- moments

Moments pmf_moments(const Pmf& pmf) {
  Moments m;
  const auto& support = pmf.support();
  if (pmf.is_exact()) {
    const auto& probs = pmf.exact_probabilities();
    ExactMoments e{Rational(0), Rational(0), Rational(0)};
    for (std::size_t i = 0; i < support.size(); ++i) {
      const Rational v(support[i]);
      e.mean += v * probs[i];
      e.second_moment += v * v * probs[i];
    }
    e.variance = e.second_moment - e.mean * e.mean;
    m.mean = e.mean.to_double();
    m.second_moment = e.second_moment.to_double();
    m.variance = e.variance.to_double();
    m.exact = std::move(e);
    return m;
  }
  const auto& probs = pmf.probabilities();
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double v = static_cast<double>(support[i]);
    m.mean += v * probs[i];
    m.second_moment += v * v * probs[i];
  }
  m.variance = std::max(0.0, m.second_moment - m.mean * m.mean);
  return m;
}

// ---------------------------------------------------------------- band DP

namespace {

void check_band(int n, int lo, int hi, const WalkParams& params) {
  if (lo >= 0 || hi <= 0) {
    throw Error(ErrorCode::BadBand, "band needs lo < 0 < hi (got (" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "))");
  }
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  if (params.mode() != Mode::Plain) {
    throw Error(ErrorCode::InvalidParams, "band-stay probabilities are defined for plain walks");
  }
}

// Forward DP over positions lo+1 .. hi−1; slot i holds position lo + 1 + i.
template <typename T>
T band_stay(int n, int lo, int hi, const T& p, const T& q, const T& r) {
  const int width = hi - lo - 1;
  std::vector<T> cur(static_cast<std::size_t>(width), T(0)), next(cur.size(), T(0));
  cur[static_cast<std::size_t>(-lo - 1)] = T(1);
  const bool lazy = !(r == T(0));
  for (int step = 0; step < n; ++step) {
    for (int i = 0; i < width; ++i) {
      T v(0);
      if (i > 0) v += p * cur[i - 1];
      if (i + 1 < width) v += q * cur[i + 1];
      if (lazy) v += r * cur[i];
      next[i] = std::move(v);
    }
    std::swap(cur, next);
  }
  T total(0);
  for (const auto& v : cur) total += v;
  return total;
}

}  // namespace

Rational band_stay_exact(int n, int lo, int hi, const WalkParams& params) {
  check_band(n, lo, hi, params);
  return band_stay<Rational>(n, lo, hi, params.p(), params.q(), params.r());
}

double band_stay_float(int n, int lo, int hi, const WalkParams& params) {
  check_band(n, lo, hi, params);
  return band_stay<double>(n, lo, hi, params.p().to_double(), params.q().to_double(),
                           params.r().to_double());
}

Probability band_stay_probability(int n, int lo, int hi, const WalkParams& params,
                                  Arithmetic arithmetic) {
  if (arithmetic == Arithmetic::Exact) return band_stay_exact(n, lo, hi, params);
  return band_stay_float(n, lo, hi, params);
}

double to_double(const Probability& prob) {
  if (const auto* r = std::get_if<Rational>(&prob)) return r->to_double();
  return std::get<double>(prob);
}

bool dominates(const Pmf& upper, const Pmf& lower) {
  std::vector<std::int64_t> thresholds = upper.support();
  thresholds.insert(thresholds.end(), lower.support().begin(), lower.support().end());
  for (const auto a : thresholds) {
    if (upper.is_exact() && lower.is_exact()) {
      if (upper.exact_tail(a) < lower.exact_tail(a)) return false;
    } else if (upper.tail(a) < lower.tail(a) - 1e-12) {
      return false;
    }
  }
  return true;
}

}  // namespace rwalk
