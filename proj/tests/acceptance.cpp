// Acceptance gate: one PASS/FAIL line per criterion, each with its tolerance
// and runtime limit pinned. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rwalk/asymptotics.hpp"
#include "rwalk/cycles.hpp"
#include "rwalk/error.hpp"
#include "rwalk/extrema_joint.hpp"
#include "rwalk/montecarlo.hpp"
#include "rwalk/oracle.hpp"
#include "rwalk/power_series.hpp"
#include "rwalk/reflect.hpp"

using namespace rwalk;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
  void note(const std::string& what) {
    if (passed) detail += (detail.empty() ? "" : "; ") + what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::vector<Rational> kPs{Rational(1, 2), Rational(1, 3), Rational(2, 5)};
constexpr double kCatalan = 0.9159655941772190;

WalkParams plain(const Rational& p) { return WalkParams(p, Rational(1) - p); }

std::string fmt(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

std::string at(int n, const Rational& p) { return "n=" + std::to_string(n) + " p=" + p.to_string(); }

Estimate run_sim(SimConfig c, SimStatistic stat) { return simulate(c).estimates.at(stat); }

Outcome displayed_matrices() {
  Outcome o;
  for (const Rational p : {Rational(1, 3), Rational(1, 2)}) {
    const Rational q = Rational(1) - p;
    using M = std::vector<std::vector<Rational>>;
    const M tables[] = {
        {{0, q}, {p, 0}},
        {{0, p * q, q * q}, {p * q, 0, 0}, {p * p, 0, 0}},
        {{0, p * q * q, p * q * q, q * q * q}, {p * p * q, p * q, 0, 0}, {p * p * q, 0, 0, 0}, {p * p * p, 0, 0, 0}},
    };
    for (int n = 1; n <= 3; ++n) {
      const JointPmf joint = joint_pmf(n, plain(p));
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= n; ++b) o.require(joint.at(a, b) == tables[n - 1][a][b], "entry differs at " + at(n, p));
      }
    }
  }
  o.note("n in {1,2,3}, p in {1/3, 1/2}, exact");
  return o;
}

Outcome cross_method() {
  Outcome o;
  for (const auto& p : kPs) {
    for (int n = 1; n <= 24; ++n) {
      const auto strong = plain(p).with_mode(Mode::StrongReflect);
      const auto weak = plain(p).with_mode(Mode::WeakReflect);
      const Pmf sm = strong_pmf_matrix(n, strong);
      o.require(sm == strong_pmf_recurrence(n, strong) && sm == strong_pmf_series(n, strong), "strong " + at(n, p));
      const Pmf wm = weak_pmf_matrix(n, weak);
      o.require(wm == weak_pmf_recurrence(n, weak) && wm == weak_pmf_series(n, weak), "weak " + at(n, p));
    }
  }
  o.note("n <= 24, 3 values of p, matrix = recurrence = series");
  return o;
}

void oracle_round(Outcome& o, int n, const WalkParams& params) {
  const JointPmf truth = enumerate_joint(n, params);
  const std::string where = at(n, params.p()) + " r=" + params.r().to_string();
  o.require(joint_pmf_band(n, params) == truth, "joint (band) " + where);
  if (!params.is_lazy()) o.require(joint_pmf(n, params) == truth, "joint (exit law) " + where);
  for (const Side side : {Side::Plus, Side::Minus}) {
    const Pmf want = side == Side::Plus ? truth.marginal_plus() : truth.marginal_minus();
    o.require(marginal_max_pmf_band(n, side, params, Arithmetic::Exact) == want, "marginal (band) " + where);
    if (!params.is_lazy()) o.require(marginal_max_pmf(n, side, params) == want, "marginal (images) " + where);
  }
  o.require(max_abs_pmf(n, params, Arithmetic::Exact) == enumerate_pmf(n, params, WalkStatistic::MaxAbs),
            "max-abs " + where);
  for (const Mode mode : {Mode::StrongReflect, Mode::WeakReflect}) {
    const auto refl = params.with_mode(mode);
    const Pmf want = enumerate_pmf(n, refl, WalkStatistic::ReflectedMax);
    o.require(reflected_pmf(n, refl, reflection_of(refl), ReflectMethod::Matrix) == want, "reflected matrix " + where);
    o.require(reflected_pmf(n, refl, reflection_of(refl), ReflectMethod::Recurrence) == want,
              "reflected recurrence " + where);
  }
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& p : kPs) {
    for (int n = 1; n <= 14; ++n) oracle_round(o, n, plain(p));
  }
  const WalkParams lazy(Rational(1, 3), Rational(1, 3), Rational(1, 3));
  for (int n = 1; n <= 10; ++n) oracle_round(o, n, lazy);
  o.note("n <= 14 for 3 values of p; n <= 10 at r = 1/3");
  return o;
}

Outcome constants() {
  Outcome o;
  const CycleMoments m = cycle_max_moments(plain(Rational(1, 3)));
  const double g = static_cast<double>(catalan_constant());
  o.require(std::fabs(static_cast<double>(m.mean) - 1.6066951524) <= 1e-9, "E(M_T) = " + fmt(m.mean, 14));
  o.require(std::fabs(static_cast<double>(m.second_moment) - 3.8813726251) <= 1e-9,
            "E(M_T^2) = " + fmt(m.second_moment, 14));
  o.require(std::fabs(g - 0.9159655941) <= 1e-10, "G = " + fmt(g, 14));
  o.note("E(M_T)=" + fmt(m.mean, 12) + " E(M_T^2)=" + fmt(m.second_moment, 12) + " G=" + fmt(g, 12));
  return o;
}

Outcome reflected_limits() {
  Outcome o;
  const int n = 10000;
  const double mean_limit = std::sqrt(std::numbers::pi / 2), second_limit = 2 * kCatalan;
  for (const Reflection r : {Reflection::Strong, Reflection::Weak}) {
    const Mode mode = r == Reflection::Strong ? Mode::StrongReflect : Mode::WeakReflect;
    const Moments m = reflected_max_moments_float(n, WalkParams::symmetric(mode), r);
    const double a = m.mean / std::sqrt(double(n)), b = m.second_moment / n;
    const std::string tag = r == Reflection::Strong ? "strong" : "weak";
    o.require(std::fabs(a / mean_limit - 1) <= 0.03, tag + " E(M)/sqrt(n) = " + fmt(a));
    o.require(std::fabs(b / second_limit - 1) <= 0.03, tag + " E(M^2)/n = " + fmt(b));
    o.note(tag + ": " + fmt(a) + ", " + fmt(b));
  }
  o.note("targets " + fmt(mean_limit) + ", " + fmt(second_limit) + " within 3%");
  return o;
}

Outcome symmetric_identity() {
  Outcome o;
  for (int n = 0; n <= 64; ++n) {
    const Moments m = pmf_moments(marginal_max_pmf(n, Side::Plus, WalkParams::symmetric()));
    o.require(m.exact->second_moment + m.exact->mean == Rational(n), "fails at n=" + std::to_string(n));
  }
  o.note("E(M^2) + E(M) = n exactly, n <= 64");
  return o;
}

Outcome asymmetric_moments() {
  Outcome o;
  const WalkParams third = plain(Rational(1, 3));
  const double plus = pmf_moments(marginal_max_pmf(200, Side::Plus, third)).mean;
  const double minus = pmf_moments(marginal_max_pmf(200, Side::Minus, third)).mean;
  // (1 − 2p)n + p/(1 − 2p) at p = 1/3, n = 200 is 203/3.
  o.require(std::fabs(minus - 203.0 / 3) <= 0.02, "E(M-) = " + fmt(minus, 10));
  o.require(std::fabs(plus - 1.0) <= 1e-4, "E(M+) = " + fmt(plus, 10));
  o.note("E(M+)=" + fmt(plus, 10) + " E(M-)=" + fmt(minus, 10) + " target 203/3");
  return o;
}

Outcome cross_moment_mc() {
  Outcome o;
  SimConfig c;
  c.n = 4096;
  c.trials = 200000;
  c.seed = 7;
  c.statistics = {SimStatistic::CrossProduct};
  const Estimate e = run_sim(c, SimStatistic::CrossProduct);
  const double ratio = e.mean / c.n, target = 2 * std::numbers::ln2 - 1;
  o.require(std::fabs(ratio - target) <= 0.02, "E(M+M-)/n = " + fmt(ratio));
  o.note("E(M+M-)/n=" + fmt(ratio) + " (stderr " + fmt(e.std_error / c.n, 3) + ") target " + fmt(target));
  return o;
}

Outcome knuth() {
  Outcome o;
  double worst = 0, worst_shifted = 0;
  for (int e = 10; e <= 20; e += 2) {
    const KnuthEstimate k = knuth_asymptotic(std::uint64_t{1} << e);
    worst = std::max(worst, std::fabs(static_cast<double>(k.residual)));
    worst_shifted = std::max(worst_shifted, std::fabs(static_cast<double>(k.shifted_residual)));
    o.require(std::fabs(static_cast<double>(k.residual)) <= 0.01,
              "n=2^" + std::to_string(e) + " residual " + fmt(k.residual) + " against log2 n + gamma/ln 2 + 1/2");
  }
  const std::string tail = "max |residual| " + fmt(worst) + "; with -1/2 instead of +1/2 max " + fmt(worst_shifted);
  if (o.passed) o.note(tail);
  else o.detail += "; " + tail;
  return o;
}

Outcome variants() {
  Outcome o;
  const double g = kCatalan;
  {
    SimConfig c;
    c.params = WalkParams(Rational(1, 3), Rational(1, 3), Rational(1, 3), Mode::WeakReflect);
    c.n = 10000;
    c.trials = 100000;
    c.seed = 11;
    c.statistics = {SimStatistic::ReflectedMax};
    const double a = run_sim(c, SimStatistic::ReflectedMax).mean / std::sqrt(double(c.n));
    o.require(std::fabs(a - 1.023) <= 0.03, "lazy E(M)/sqrt(n) = " + fmt(a));
    o.note("lazy " + fmt(a));
  }
  {
    SimConfig c;
    c.process = Process::TrafficLight;
    c.n = 30000;
    c.trials = 100000;
    c.seed = 13;
    c.statistics = {SimStatistic::ReflectedMax};
    const Estimate e = run_sim(c, SimStatistic::ReflectedMax);
    const double a = e.mean / std::sqrt(double(c.n)), b = e.second_moment / c.n;
    o.require(std::fabs(a - 0.512) <= 0.02, "traffic E(M)/sqrt(n) = " + fmt(a));
    o.require(std::fabs(b - g / 3) <= 0.03, "traffic E(M^2)/n = " + fmt(b));
    o.note("traffic " + fmt(a) + ", " + fmt(b));
  }
  {
    SimConfig c;
    c.process = Process::Persistent;
    c.persistent.alpha = 0.7;
    c.n = 10000;
    c.trials = 100000;
    c.seed = 17;
    c.statistics = {SimStatistic::MaxPlus};
    const double a = run_sim(c, SimStatistic::MaxPlus).mean / std::sqrt(double(c.n));
    const double target = std::sqrt(0.7 / 0.3) * std::sqrt(2 / std::numbers::pi);
    o.require(std::fabs(a / target - 1) <= 0.05, "persistent E(M+)/sqrt(n) = " + fmt(a));
    o.note("persistent " + fmt(a) + " vs " + fmt(target));
  }
  return o;
}

Outcome properties() {
  Outcome o;
  for (const auto& p : kPs) {
    const auto strong = plain(p).with_mode(Mode::StrongReflect);
    const auto weak = plain(p).with_mode(Mode::WeakReflect);
    for (int n = 1; n <= 12; ++n) {
      const Pmf s = strong_pmf_matrix(n, strong), w = weak_pmf_matrix(n, weak);
      o.require(dominates(s, w), "dominance " + at(n, p));
      std::vector<Pmf> all{s, w, marginal_max_pmf(n, Side::Plus, plain(p)),
                           marginal_max_pmf(n, Side::Minus, plain(p)), max_abs_pmf(n, plain(p), Arithmetic::Exact),
                           joint_pmf(n, plain(p)).marginal_plus()};
      for (const Pmf& pmf : all) {
        Rational total(0);
        for (const auto& mass : pmf.exact_probabilities()) total += mass;
        o.require(total == Rational(1), "normalization " + at(n, p));
      }
    }
    const Rational q = Rational(1) - p;
    const int order = 32;
    const PowerSeries theta = theta_series(p, q, order);
    const PowerSeries lambda = PowerSeries::monomial(1, 1, order);
    const PowerSeries quad = lambda * theta * theta - Rational(2) * theta + (Rational(4) * p * q) * lambda;
    o.require(quad == PowerSeries(order), "quadratic identity p=" + p.to_string());
    o.require(series_div(Rational(2) * theta, theta * theta + Rational(4) * p * q) == lambda,
              "inversion identity p=" + p.to_string());
  }
  SimConfig c;
  c.params = plain(Rational(2, 5)).with_mode(Mode::StrongReflect);
  c.n = 500;
  c.trials = 20000;
  c.seed = 3;
  c.statistics = {SimStatistic::ReflectedMax};
  const SimResult reference = simulate_serial(c);
  for (int workers : {1, 2, 4, 8}) {
    c.workers = workers;
    o.require(simulate(c).same_estimates(reference), "simulate differs with " + std::to_string(workers) + " workers");
  }
  o.note("dominance and normalization n <= 12; theta identities to order 32; workers 1,2,4,8");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "displayed joint matrices", 1, displayed_matrices},
      {2, "cross-method equality", 60, cross_method},
      {3, "oracle equivalence", 120, oracle_equivalence},
      {4, "constants", 1, constants},
      {5, "symmetric reflected limits", 90, reflected_limits},
      {6, "symmetric plain-walk identity", 5, symmetric_identity},
      {7, "asymmetric moments", 60, asymmetric_moments},
      {8, "cross-moment Monte Carlo", 60, cross_moment_mc},
      {9, "Knuth asymptotic", 5, knuth},
      {10, "walk variants Monte Carlo", 600, variants},
      {11, "property suites", 60, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o.passed = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.passed = false;
      o.detail += "; runtime " + fmt(secs, 3) + " s exceeds " + fmt(c.limit_seconds) + " s";
    }
    if (!o.passed) ++failures;
    std::printf("%s  %2d  %-30s %8.2f s  %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
