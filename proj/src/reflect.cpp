#include "rwalk/reflect.hpp"

#include <algorithm>

#include "rwalk/error.hpp"

namespace rwalk {

namespace {

// Transition out of the origin: strong reflection turns the down step into an
// up step, weak reflection turns it into a hold.
Rational origin_up(const WalkParams& params, Reflection reflection) {
  return reflection == Reflection::Strong ? params.p() + params.q() : params.p();
}

Rational origin_stay(const WalkParams& params, Reflection reflection) {
  return reflection == Reflection::Strong ? params.r() : params.q() + params.r();
}

void check_horizon(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
}

// pmf from hit(a) = P{M_n >= a}, a = 1..n; hit(0) = 1, hit(n+1) = 0.
Pmf pmf_from_hits(const std::vector<Rational>& hit) {
  std::map<std::int64_t, Rational> masses;
  const int n = static_cast<int>(hit.size()) - 1;
  for (int a = 0; a <= n; ++a) {
    const Rational upper = a == 0 ? Rational(1) : hit[a];
    const Rational lower = a == n ? Rational(0) : hit[a + 1];
    masses[a] = upper - lower;
  }
  return Pmf::exact(masses);
}

Pmf pmf_matrix(int n, const WalkParams& params, Reflection reflection) {
  check_horizon(n);
  std::vector<Rational> hit(static_cast<std::size_t>(n) + 1, Rational(1));
  for (int a = 1; a <= n; ++a) hit[a] = ReflectChain(a, params, reflection).hit_probability(n);
  return pmf_from_hits(hit);
}

// table[a][x] = P{S_m = x, M_m = a}, advanced one step at a time from m = 0.
Pmf pmf_recurrence(int n, const WalkParams& params, Reflection reflection) {
  check_horizon(n);
  const Rational& p = params.p();
  const Rational& q = params.q();
  const Rational& r = params.r();
  const Rational up0 = origin_up(params, reflection);
  const Rational stay0 = origin_stay(params, reflection);
  using Table = std::vector<std::vector<Rational>>;
  Table cur(1, std::vector<Rational>(1, Rational(1)));
  auto at = [](const Table& t, int x, int a) -> Rational {
    if (a < 0 || a >= static_cast<int>(t.size()) || x < 0 || x > a) return 0;
    return t[a][x];
  };
  for (int m = 0; m < n; ++m) {
    const int top = m + 1;
    Table next(static_cast<std::size_t>(top) + 1);
    for (int a = 0; a <= top; ++a) {
      next[a].assign(static_cast<std::size_t>(a) + 1, Rational(0));
      next[a][0] = stay0 * at(cur, 0, a) + q * at(cur, 1, a);
      if (a == 0) continue;
      Rational one = r * at(cur, 1, a) + q * at(cur, 2, a);
      one += up0 * at(cur, 0, a);
      if (a == 1) one += up0 * at(cur, 0, 0);  // first visit to 1 from the origin
      next[a][1] = std::move(one);
      for (int x = 2; x <= a; ++x) {
        Rational v = p * at(cur, x - 1, a) + r * at(cur, x, a);
        if (x < a) {
          v += q * at(cur, x + 1, a);
        } else {
          v += p * at(cur, a - 1, a - 1);  // new maximum
        }
        next[a][x] = std::move(v);
      }
    }
    cur = std::move(next);
  }
  std::map<std::int64_t, Rational> masses;
  for (int a = 0; a <= n; ++a) {
    Rational sum(0);
    for (const auto& v : cur[a]) sum += v;
    masses[a] = std::move(sum);
  }
  return Pmf::exact(masses);
}

void check_series_params(int n, const WalkParams& params) {
  if (n > kSeriesMaxN) throw Error(ErrorCode::TooLarge, "series method capped at n = 32");
  if (params.is_lazy()) throw Error(ErrorCode::InvalidParams, "series method needs r = 0");
  if (params.p().is_zero()) throw Error(ErrorCode::InvalidParams, "series method needs p > 0");
}

// Common shell (θ² − 4pq)/(1 − λ) · [X(a) − X(a+1)] of both series methods.
struct SeriesContext {
  int order;
  Rational p, q;
  PowerSeries theta, theta_sq, prefactor;

  SeriesContext(int order_, const WalkParams& params)
      : order(std::max(order_, 1)),
        p(params.p()),
        q(params.q()),
        theta(theta_series(p, q, order)),
        theta_sq(theta * theta),
        prefactor((theta_sq - p * q * Rational(4)) * geometric_series(order)) {}

  PowerSeries strong_term(int a) const {
    const PowerSeries num = (Rational(2).pow(a) * p.pow(a - 1)) * theta.pow(a);
    const PowerSeries den =
        (Rational(2).pow(2 * a) * p.pow(a - 1) * q.pow(a + 1)) * (theta_sq - p * p * Rational(4)) +
        theta.pow(2 * a) * (theta_sq - q * q * Rational(4));
    return series_div(num, den);
  }

  PowerSeries weak_term(int a) const {
    const PowerSeries num = (Rational(2).pow(a) * p.pow(a)) * theta.pow(a);
    const PowerSeries den =
        (Rational(2).pow(2 * a + 1) * p.pow(a) * q.pow(a + 1)) * (theta - p * Rational(2)) +
        theta.pow(2 * a + 1) * (theta - q * Rational(2));
    return series_div(num, den);
  }

  // (1/(1−λ))·(2pθ/(θ²+4pq)).
  PowerSeries marginal_factor() const {
    const PowerSeries num = (p * Rational(2)) * theta;
    return series_div(num, theta_sq + p * q * Rational(4)) * geometric_series(order);
  }
};

Pmf pmf_series(int n, const WalkParams& params, Reflection reflection) {
  check_horizon(n);
  check_series_params(n, params);
  if (n == 0) return Pmf::exact({{0, Rational(1)}});
  const SeriesContext ctx(n, params);
  auto term = [&](int a) {
    return reflection == Reflection::Strong ? ctx.strong_term(a) : ctx.weak_term(a);
  };
  std::map<std::int64_t, Rational> masses;
  Rational positive(0);
  PowerSeries current = term(1);
  for (int a = 1; a <= n; ++a) {
    PowerSeries following = term(a + 1);
    Rational mass = (ctx.prefactor * (current - following))[n];
    positive += mass;
    masses[a] = std::move(mass);
    current = std::move(following);
  }
  masses[0] = reflection == Reflection::Strong ? Rational(1) - positive : params.q().pow(n);
  return Pmf::exact(masses);
}

void check_gf_args(int a, int order, const WalkParams& params) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative series order");
  if (a < 0) throw Error(ErrorCode::InvalidArgument, "barrier must be nonnegative");
  if (params.is_lazy()) throw Error(ErrorCode::InvalidParams, "closed forms need r = 0");
  if (params.p().is_zero()) throw Error(ErrorCode::InvalidParams, "closed forms need p > 0");
}

}  // namespace

ReflectChain::ReflectChain(int a, const WalkParams& params, Reflection reflection)
    : a_(a), reflection_(reflection) {
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "barrier must be >= 1");
  below_.assign(static_cast<std::size_t>(a) + 1, Rational(0));
  stay_.assign(below_.size(), Rational(0));
  above_.assign(below_.size(), Rational(0));
  stay_[0] = origin_stay(params, reflection);
  above_[0] = origin_up(params, reflection);
  for (int i = 1; i < a; ++i) {
    below_[i] = params.q();
    stay_[i] = params.r();
    above_[i] = params.p();
  }
  stay_[a] = 1;
  for (int i = 0; i <= a; ++i) {
    if (below_[i] + stay_[i] + above_[i] != Rational(1)) {
      throw Error(ErrorCode::InvalidParams, "reflect chain row is not stochastic");
    }
  }
}

Rational ReflectChain::entry(int i, int j) const {
  if (i < 0 || i > a_ || j < 0 || j > a_) throw Error(ErrorCode::InvalidArgument, "chain index out of range");
  if (j == i - 1) return below_[i];
  if (j == i) return stay_[i];
  if (j == i + 1) return above_[i];
  return 0;
}

Rational ReflectChain::hit_probability(int n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  std::vector<Rational> d(static_cast<std::size_t>(a_) + 1, Rational(0)), e(d.size());
  d[0] = 1;
  for (int step = 0; step < n; ++step) {
    const int reach = std::min(step + 1, a_);
    for (int j = 0; j <= reach; ++j) {
      Rational v = stay_[j] * d[j];
      if (j > 0) v += above_[j - 1] * d[j - 1];
      if (j < a_) v += below_[j + 1] * d[j + 1];
      e[j] = std::move(v);
    }
    std::swap(d, e);
  }
  return d[a_];
}

Pmf strong_pmf_matrix(int n, const WalkParams& params) {
  return pmf_matrix(n, params, Reflection::Strong);
}
Pmf strong_pmf_recurrence(int n, const WalkParams& params) {
  return pmf_recurrence(n, params, Reflection::Strong);
}
Pmf strong_pmf_series(int n, const WalkParams& params) {
  return pmf_series(n, params, Reflection::Strong);
}
Pmf weak_pmf_matrix(int n, const WalkParams& params) {
  return pmf_matrix(n, params, Reflection::Weak);
}
Pmf weak_pmf_recurrence(int n, const WalkParams& params) {
  return pmf_recurrence(n, params, Reflection::Weak);
}
Pmf weak_pmf_series(int n, const WalkParams& params) {
  return pmf_series(n, params, Reflection::Weak);
}

PowerSeries strong_gf_diagonal(int a, int order, const WalkParams& params) {
  check_gf_args(a, order, params);
  const SeriesContext ctx(order, params);
  const Rational& p = ctx.p;
  const Rational& q = ctx.q;
  const Rational four_pq = p * q * Rational(4);
  const PowerSeries num = (Rational(2).pow(a) * p.pow(a - 1)) *
                          ((ctx.theta_sq - four_pq) * (ctx.theta_sq + four_pq) * ctx.theta.pow(a));
  const PowerSeries den =
      (Rational(2).pow(2 * a + 2) * p.pow(a) * q.pow(a + 2)) * (ctx.theta_sq - p * p * Rational(4)) +
      ctx.theta.pow(2 * a + 2) * (ctx.theta_sq - q * q * Rational(4));
  return series_div(num, den).truncated(order);
}

PowerSeries strong_gf_marginal(int a, int order, const WalkParams& params) {
  check_gf_args(a, order, params);
  if (a < 1) throw Error(ErrorCode::InvalidArgument, "marginal needs a >= 1");
  const int o = std::max(order, 2);
  if (a == 1) {
    const Rational& q = params.q();
    const PowerSeries num = PowerSeries::monomial(1, 1, o) + PowerSeries::monomial(q, 2, o);
    const PowerSeries den = PowerSeries::constant(1, o) - PowerSeries::monomial(q, 2, o);
    return series_div(num, den).truncated(order);
  }
  const SeriesContext ctx(o, params);
  const PowerSeries diff = strong_gf_diagonal(a - 1, o, params) - strong_gf_diagonal(a, o, params);
  return (ctx.marginal_factor() * diff).truncated(order);
}

PowerSeries weak_gf_diagonal(int a, int order, const WalkParams& params) {
  check_gf_args(a, order, params);
  const int o = std::max(order, 1);
  const Rational& q = params.q();
  if (a == 0) {
    // G_n(0, 0) = qⁿ for n >= 1.
    const PowerSeries den = PowerSeries::constant(1, o) - PowerSeries::monomial(q, 1, o);
    return series_div(PowerSeries::monomial(q, 1, o), den).truncated(order);
  }
  const SeriesContext ctx(o, params);
  const Rational& p = ctx.p;
  const Rational four_pq = p * q * Rational(4);
  const PowerSeries num = (Rational(2).pow(a) * p.pow(a)) *
                          ((ctx.theta_sq - four_pq) * (ctx.theta_sq + four_pq) * ctx.theta.pow(a));
  const PowerSeries den =
      (Rational(2).pow(2 * a + 3) * p.pow(a + 1) * q.pow(a + 2)) * (ctx.theta - p * Rational(2)) +
      ctx.theta.pow(2 * a + 3) * (ctx.theta - q * Rational(2));
  return series_div(num, den).truncated(order);
}

PowerSeries weak_gf_marginal(int a, int order, const WalkParams& params) {
  check_gf_args(a, order, params);
  const int o = std::max(order, 3);
  const Rational& p = params.p();
  const Rational& q = params.q();
  if (a == 0) return weak_gf_diagonal(0, order, params);
  if (a == 1) {
    const PowerSeries one = PowerSeries::constant(1, o);
    const PowerSeries den = (one - PowerSeries::monomial(q, 1, o)) *
                            (one - PowerSeries::monomial(q, 1, o) - PowerSeries::monomial(p * q, 2, o));
    return series_div(PowerSeries::monomial(p, 1, o), den).truncated(order);
  }
  const SeriesContext ctx(o, params);
  const PowerSeries diff = weak_gf_diagonal(a - 1, o, params) - weak_gf_diagonal(a, o, params);
  return (ctx.marginal_factor() * diff).truncated(order);
}

namespace {

// Hitting probabilities P{M_n >= a} for a = 1, 2, .. in fixed-size batches,
// stopping after the first batch that reaches the tail cutoff.
std::vector<double> float_hits(int n, const WalkParams& params, Reflection reflection, Exec exec) {
  const StepLaw law = StepLaw::from(params);
  constexpr int kBatch = 64;
  std::vector<double> hits{1.0};
  for (int first = 1; first <= n; first += kBatch) {
    const int last = std::min(n, first + kBatch - 1);
    const auto batch = reflected_hit_probabilities(n, first, last, law, reflection, exec);
    for (const double h : batch) {
      hits.push_back(h);
      if (h < kReflectTailCutoff) return hits;
    }
  }
  return hits;
}

}  // namespace

Pmf reflected_pmf_float(int n, const WalkParams& params, Reflection reflection, Exec exec) {
  check_horizon(n);
  const auto hits = float_hits(n, params, reflection, exec);
  std::map<std::int64_t, double> masses;
  for (std::size_t a = 0; a < hits.size(); ++a) {
    const double next = a + 1 < hits.size() ? hits[a + 1] : 0.0;
    masses[static_cast<std::int64_t>(a)] = hits[a] - next;
  }
  return Pmf::approx(masses);
}

Moments reflected_max_moments_float(int n, const WalkParams& params, Reflection reflection,
                                    Exec exec) {
  check_horizon(n);
  const auto hits = float_hits(n, params, reflection, exec);
  Moments m{};
  for (std::size_t a = 1; a < hits.size(); ++a) {
    m.mean += hits[a];
    m.second_moment += static_cast<double>(2 * a - 1) * hits[a];
  }
  m.variance = m.second_moment - m.mean * m.mean;
  return m;
}

Pmf reflected_pmf(int n, const WalkParams& params, Reflection reflection, ReflectMethod method) {
  if (n > kReflectExactMaxN) return reflected_pmf_float(n, params, reflection);
  switch (method) {
    case ReflectMethod::Matrix:
      return pmf_matrix(n, params, reflection);
    case ReflectMethod::Recurrence:
      return pmf_recurrence(n, params, reflection);
    case ReflectMethod::Series:
      return pmf_series(n, params, reflection);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown reflect method");
}

Reflection reflection_of(const WalkParams& params) {
  switch (params.mode()) {
    case Mode::StrongReflect:
      return Reflection::Strong;
    case Mode::WeakReflect:
      return Reflection::Weak;
    default:
      throw Error(ErrorCode::InvalidParams, "walk mode is not a reflection");
  }
}

}  // namespace rwalk
