#include "rwalk/extrema_joint.hpp"

#include <algorithm>
#include <cmath>

#include "rwalk/error.hpp"
#include "rwalk/kernels.hpp"
#include "rwalk/montecarlo.hpp"
#include "rwalk/power_series.hpp"

namespace rwalk {

namespace {

void require_simple_plain(const WalkParams& params, const char* what) {
  if (params.mode() != Mode::Plain) {
    throw Error(ErrorCode::InvalidParams, std::string(what) + " needs a plain walk");
  }
  if (params.is_lazy()) {
    throw Error(ErrorCode::InvalidParams, std::string(what) + " is the r = 0 formula");
  }
}

// C[n, j] for one fixed n and every j, with (pq)^k powers, reused across the
// O(n²) ψ evaluations of one recurrence step.
class PassageTable {
 public:
  PassageTable(int n, const WalkParams& params) : n_(n), p_(params.p()), q_(params.q()) {
    const Rational pq = p_ * q_;
    pq_pow_.assign(static_cast<std::size_t>(2 * n + 4), Rational(1));
    for (std::size_t k = 1; k < pq_pow_.size(); ++k) pq_pow_[k] = pq_pow_[k - 1] * pq;
    c_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int j = 1; j <= n; ++j) {
      if ((n - j) % 2 != 0) continue;
      const int h = (n - j) / 2;
      c_[j] = Rational(binom(n, h) * binom(n - h, h + j), BigInt(n)) * Rational(j) * pq_pow(h);
    }
  }

  const Rational& C(long j) const {
    static const Rational zero(0);
    if (j <= 0 || j > n_) return zero;
    return c_[static_cast<std::size_t>(j)];
  }

  Rational pq_pow(long k) const {
    if (k < static_cast<long>(pq_pow_.size())) return pq_pow_[static_cast<std::size_t>(k)];
    return (p_ * q_).pow(static_cast<int>(k));
  }

  // One side of the exit law: exits through `near` with the far barrier at
  // distance `far`. `printed` applies the image weight (pq)^far uniformly.
  Rational side(int near, int far, const Rational& step_prob, bool printed) const {
    if (n_ < near) return 0;
    const long period = 2L * (near + far);
    const long terms = (n_ - near) / period;
    Rational sum(0);
    for (long k = 0; k <= terms; ++k) {
      const long shift = static_cast<long>(near + far) * k;
      const Rational& direct = C(period * k + near);
      const Rational& image = C(period * k + near + 2L * far);
      if (!direct.is_zero()) sum += pq_pow(shift) * direct;
      if (!image.is_zero()) sum -= pq_pow(printed ? far : shift + far) * image;
    }
    return step_prob.pow(near) * sum;
  }

  ExitLawTerms psi(int a, int b, bool printed) const {
    ExitLawTerms t{n_, a, b, Rational(0), Rational(0), Rational(0)};
    if (n_ < std::min(a, b)) return t;
    t.f_value = side(a, b, p_, printed);
    t.g_value = side(b, a, q_, printed);
    t.psi_value = t.f_value + t.g_value;
    return t;
  }

 private:
  int n_;
  Rational p_, q_;
  std::vector<Rational> pq_pow_;
  std::vector<Rational> c_;
};

void check_psi_args(int n, int a, int b) {
  if (n < 1 || a < 0 || b < 0 || (a == 0 && b == 0)) {
    throw Error(ErrorCode::InvalidArgument, "ψ needs n >= 1, a, b >= 0, (a, b) != (0, 0)");
  }
}

}  // namespace

Rational first_passage_C(int n, int j, const WalkParams& params) {
  require_simple_plain(params, "first_passage_C");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "first_passage_C needs n >= 1");
  if (j <= 0 || j > n || (n - j) % 2 != 0) return 0;
  return PassageTable(n, params).C(j);
}

ExitLawTerms exit_probability_psi(int n, int a, int b, const WalkParams& params) {
  require_simple_plain(params, "exit_probability_psi");
  check_psi_args(n, a, b);
  return PassageTable(n, params).psi(a, b, false);
}

ExitLawTerms exit_probability_psi_as_printed(int n, int a, int b, const WalkParams& params) {
  require_simple_plain(params, "exit_probability_psi");
  check_psi_args(n, a, b);
  return PassageTable(n, params).psi(a, b, true);
}

JointPmf joint_pmf(int n, const WalkParams& params) {
  require_simple_plain(params, "joint_pmf");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  // phi[a][b] at the current time; grows by one row/column per step.
  std::vector<std::vector<Rational>> phi(1, std::vector<Rational>(1, Rational(1)));
  for (int m = 0; m < n; ++m) {
    const int next = m + 1;
    const PassageTable table(next, params);
    const int span = next + 2;  // ψ arguments run over 0 .. next+1
    std::vector<std::vector<Rational>> psi(span, std::vector<Rational>(span));
    for (int a = 0; a < span; ++a) {
      for (int b = 0; b < span; ++b) {
        if (a == 0 && b == 0) continue;
        psi[a][b] = table.psi(a, b, false).psi_value;
      }
    }
    std::vector<std::vector<Rational>> out(next + 1, std::vector<Rational>(next + 1));
    for (int a = 0; a <= next; ++a) {
      for (int b = 0; b <= next; ++b) {
        if (a == 0 && b == 0) continue;  // φ(n, 0, 0) = 0 for n >= 1
        Rational v = (a <= m && b <= m) ? phi[a][b] : Rational(0);
        v -= psi[a + 1][b + 1];
        v += psi[a + 1][b];
        v += psi[a][b + 1];
        v -= psi[a][b];
        out[a][b] = std::move(v);
      }
    }
    phi = std::move(out);
  }
  std::map<JointPmf::Key, Rational> entries;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (!phi[a][b].is_zero()) entries.emplace(JointPmf::Key{a, b}, phi[a][b]);
    }
  }
  return JointPmf(n, entries);
}

JointPmf joint_pmf_band(int n, const WalkParams& params) {
  if (params.mode() != Mode::Plain) {
    throw Error(ErrorCode::InvalidParams, "joint_pmf_band needs a plain walk");
  }
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  // stay[w][b] = P{stay in (−b, w−b)} for widths 2 .. 2n+2.
  std::vector<std::vector<Rational>> stay(static_cast<std::size_t>(2 * n + 3));
  for (int w = 2; w <= 2 * n + 2; ++w) stay[w] = survival_by_start_exact(n, w, params);
  // H(a, b) = P{M⁺ < a, M⁻ < b}; zero when either bound is 0.
  auto H = [&](int a, int b) -> Rational {
    if (a <= 0 || b <= 0) return 0;
    return stay[a + b][b];
  };
  std::map<JointPmf::Key, Rational> entries;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      Rational v = H(a + 1, b + 1) - H(a, b + 1) - H(a + 1, b) + H(a, b);
      if (!v.is_zero()) entries.emplace(JointPmf::Key{a, b}, std::move(v));
    }
  }
  return JointPmf(n, entries);
}

namespace {

// P{S_n = k} for k = 0..n with x the up-probability, y the down-probability.
std::vector<Rational> endpoint_masses(int n, const Rational& x, const Rational& y) {
  std::vector<Rational> t(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; ++k) {
    if ((n + k) % 2 != 0) continue;
    const int ups = (n + k) / 2;
    t[k] = Rational(binom(n, ups)) * x.pow(ups) * y.pow(n - ups);
  }
  return t;
}

// ω(n, c) for c = 0 .. n+1, optionally without the double-counted k = c term.
std::vector<Rational> omega_table(int n, const Rational& x, const Rational& y, bool corrected) {
  const auto t = endpoint_masses(n, x, y);
  const Rational ratio = y / x;
  std::vector<Rational> ratio_pow(static_cast<std::size_t>(n) + 1, Rational(1));
  for (int k = 1; k <= n; ++k) ratio_pow[k] = ratio_pow[k - 1] * ratio;
  std::vector<Rational> omega(static_cast<std::size_t>(n) + 2, Rational(0));
  for (int c = 0; c <= n; ++c) {
    Rational sum(0);
    for (int k = c; k <= n; ++k) {
      if (t[k].is_zero()) continue;
      sum += (Rational(1) + ratio_pow[k - c]) * t[k];
    }
    if (corrected) sum -= t[c];
    omega[c] = std::move(sum);
  }
  return omega;
}

std::pair<Rational, Rational> side_roles(Side side, const WalkParams& params) {
  return side == Side::Plus ? std::pair{params.p(), params.q()}
                            : std::pair{params.q(), params.p()};
}

}  // namespace

Pmf marginal_max_pmf(int n, Side side, const WalkParams& params) {
  require_simple_plain(params, "marginal_max_pmf");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  const auto [x, y] = side_roles(side, params);
  if (x.is_zero()) return Pmf::exact({{0, Rational(1)}});
  const auto omega = omega_table(n, x, y, true);
  std::map<std::int64_t, Rational> masses;
  for (int a = 0; a <= n; ++a) masses[a] = omega[a] - omega[a + 1];
  return Pmf::exact(masses);
}

std::vector<Rational> marginal_max_masses_uncorrected(int n, Side side, const WalkParams& params) {
  require_simple_plain(params, "marginal_max_masses_uncorrected");
  const auto [x, y] = side_roles(side, params);
  if (x.is_zero()) throw Error(ErrorCode::InvalidParams, "ω needs a positive step probability");
  const auto omega = omega_table(n, x, y, false);
  std::vector<Rational> out;
  for (int a = 0; a <= n; ++a) out.push_back(omega[a] - omega[a + 1]);
  return out;
}

Pmf marginal_max_pmf_band(int n, Side side, const WalkParams& params, Arithmetic arithmetic) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  // below(a) = P{M < a}: the far barrier at distance n+1 is never reached.
  auto lo_hi = [&](int a) {
    return side == Side::Plus ? std::pair{-(n + 1), a} : std::pair{-a, n + 1};
  };
  if (arithmetic == Arithmetic::Exact) {
    std::map<std::int64_t, Rational> masses;
    Rational prev(0);
    for (int a = 0; a <= n; ++a) {
      const auto [lo, hi] = lo_hi(a + 1);
      Rational below = band_stay_exact(n, lo, hi, params);
      masses[a] = below - prev;
      prev = std::move(below);
    }
    return Pmf::exact(masses);
  }
  std::map<std::int64_t, double> masses;
  double prev = 0;
  for (int a = 0; a <= n; ++a) {
    const auto [lo, hi] = lo_hi(a + 1);
    const double below = band_stay_float(n, lo, hi, params);
    masses[a] = below - prev;
    prev = below;
  }
  return Pmf::approx(masses);
}

Pmf symmetric_max_pmf(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  const Rational scale = Rational(1, 2).pow(n);
  std::map<std::int64_t, Rational> masses;
  for (int k = 0; k <= n; ++k) masses[k] = Rational(binom(n, (n - k) / 2)) * scale;
  return Pmf::exact(masses);
}

SymmetricMaxSeries symmetric_max_series(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "negative series length");
  const int order = std::max(n_max, 2);
  const PowerSeries root =
      series_sqrt(PowerSeries::constant(1, order) + PowerSeries::monomial(-4, 2, order));
  const PowerSeries two_x = PowerSeries::monomial(2, 1, order);
  const PowerSeries one_minus = PowerSeries::constant(1, order) - two_x;
  const PowerSeries denom = Rational(2) * (one_minus * one_minus);
  const PowerSeries xi = series_div(two_x - Rational(1) + root, denom);
  const PowerSeries eta = series_div(two_x + Rational(1) - root, denom);
  SymmetricMaxSeries out;
  for (int k = 0; k <= n_max; ++k) {
    if (xi[k].denominator() != 1 || eta[k].denominator() != 1) {
      throw Error(ErrorCode::InvalidArgument, "non-integral ξ/η coefficient");
    }
    out.xi.push_back(xi[k].numerator());
    out.eta.push_back(eta[k].numerator());
  }
  return out;
}

Rational symmetric_max_mean(int n) {
  const auto s = symmetric_max_series(n);
  return Rational(s.xi[n]) * Rational(1, 2).pow(n);
}

Rational symmetric_max_second_moment(int n) {
  const auto s = symmetric_max_series(n);
  return Rational(s.eta[n]) * Rational(1, 2).pow(n);
}

Pmf max_abs_pmf(int n, const WalkParams& params, Arithmetic arithmetic) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  if (arithmetic == Arithmetic::Exact) {
    std::map<std::int64_t, Rational> masses;
    Rational prev(0);  // P{max|S| < a}, zero at a = 0
    for (int a = 0; a <= n; ++a) {
      Rational below = band_stay_exact(n, -(a + 1), a + 1, params);
      masses[a] = below - prev;
      prev = std::move(below);
    }
    return Pmf::exact(masses);
  }
  std::map<std::int64_t, double> masses;
  double prev = 0;
  for (int a = 0; a <= n; ++a) {
    const double below = band_stay_float(n, -(a + 1), a + 1, params);
    masses[a] = below - prev;
    prev = below;
    if (1.0 - below < 1e-17) break;
  }
  return Pmf::approx(masses);
}

Rational cross_moment_exact(int n, const WalkParams& params) {
  if (params.mode() != Mode::Plain) throw Error(ErrorCode::InvalidParams, "cross moment needs a plain walk");
  if (n > kCrossMomentBandMaxN) throw Error(ErrorCode::TooLarge, "band DP cross moment capped at n = 512");
  if (n < 1) return 0;
  // stay[w][s] = P{stay in (0, w) from s}; marginals use width a + n + 1.
  std::vector<std::vector<Rational>> stay(static_cast<std::size_t>(2 * n + 2));
  for (int w = 2; w <= 2 * n + 1; ++w) stay[w] = survival_by_start_exact(n, w, params);
  Rational total(0);
  for (int a = 1; a <= n; ++a) {
    const Rational below_plus = stay[a + n + 1][n + 1];
    for (int b = 1; b <= n; ++b) {
      const Rational& below_minus = stay[b + n + 1][b];
      total += Rational(1) - below_plus - below_minus + stay[a + b][b];
    }
  }
  return total;
}

double cross_moment(int n, const WalkParams& params, CrossMethod method,
                    const CrossMomentOptions& options) {
  if (params.mode() != Mode::Plain) throw Error(ErrorCode::InvalidParams, "cross moment needs a plain walk");
  if (method == CrossMethod::MonteCarlo) {
    SimConfig config;
    config.params = params;
    config.n = n;
    config.trials = options.trials;
    config.seed = options.seed;
    config.statistics = {SimStatistic::CrossProduct};
    return simulate(config).estimates.at(SimStatistic::CrossProduct).mean;
  }
  if (n > kCrossMomentBandMaxN) throw Error(ErrorCode::TooLarge, "band DP cross moment capped at n = 512");
  if (options.arithmetic == Arithmetic::Exact) return cross_moment_exact(n, params).to_double();
  if (n < 1) return 0.0;

  const StepLaw law = StepLaw::from(params);
  // Marginal survivals: width a + n + 1 for a = 1..n.
  const auto wide = survival_table(n, n + 2, 2 * n + 1, law, Exec::Parallel);
  std::vector<double> tail_plus(n + 2, 0.0), tail_minus(n + 2, 0.0);  // P{M >= a}
  for (int a = 1; a <= n; ++a) {
    const auto& u = wide[static_cast<std::size_t>(a - 1)];
    tail_plus[a] = 1.0 - u[n + 1];
    tail_minus[a] = 1.0 - u[a];
  }
  // Cut where the remaining tail mass Σ_{a' >= a} P{M >= a'} drops below 1e-15.
  auto cutoff = [&](const std::vector<double>& tail) {
    double remaining = 0;
    int a = n;
    while (a >= 1 && remaining + tail[a] < 1e-15) remaining += tail[a--];
    return std::max(a, 1);
  };
  const int a_max = cutoff(tail_plus);
  const int b_max = cutoff(tail_minus);
  const auto narrow = survival_table(n, 2, a_max + b_max, law, Exec::Parallel);
  double total = 0;
  for (int a = 1; a <= a_max; ++a) {
    for (int b = 1; b <= b_max; ++b) {
      const double stay = narrow[static_cast<std::size_t>(a + b - 2)][b];
      total += tail_plus[a] + tail_minus[b] - 1.0 + stay;
    }
  }
  return total;
}

}  // namespace rwalk
