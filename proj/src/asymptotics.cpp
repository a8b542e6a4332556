#include "rwalk/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "rwalk/error.hpp"

namespace rwalk {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::RegimeMismatch, what);
}

bool is_reflected(const WalkParams& params) {
  return params.mode() == Mode::StrongReflect || params.mode() == Mode::WeakReflect;
}

Moments from_mean_second(double mean, double second) {
  Moments m{};
  m.mean = mean;
  m.second_moment = second;
  m.variance = second - mean * mean;
  return m;
}

Moments symmetric_max(double n) {
  const double s = std::sqrt(2 * n / std::numbers::pi);
  return from_mean_second(s - 0.5, n - s + 0.5);
}

Moments asymmetric_max(double p) {
  const double d = 1 - 2 * p;
  return from_mean_second(p / d, p / (d * d));
}

void check_probe(double t) {
  if (!(t > 0 && t <= 1)) throw Error(ErrorCode::InvalidArgument, "probe needs 0 < t <= 1");
}

double probe_arg(int a, double t, ProbeScenario scenario) {
  return scenario == ProbeScenario::Strong ? a * t : (a + 0.5) * t;
}

}  // namespace

Moments predict_moments(Regime regime, int n, const WalkParams& params,
                        std::optional<double> persistent_alpha) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "horizon must be >= 1");
  const double nn = n;
  const double p = params.p().to_double();
  const double r = params.r().to_double();
  const double g = static_cast<double>(catalan_constant());
  const bool plain = params.mode() == Mode::Plain;
  const bool asym = params.p() < params.q() && !params.is_lazy();
  switch (regime) {
    case Regime::SymmetricPlainMax:
      require(plain && params.is_symmetric() && !params.is_lazy(), "needs plain p = q = 1/2");
      return symmetric_max(nn);
    case Regime::SymmetricPlainCross: {
      require(plain && params.is_symmetric() && !params.is_lazy(), "needs plain p = q = 1/2");
      Moments m = symmetric_max(nn);
      m.cross_moment = (2 * std::numbers::ln2 - 1) * nn;
      return m;
    }
    case Regime::AsymmetricPlainMax:
      require(plain && asym, "needs plain p < q, r = 0");
      return asymmetric_max(p);
    case Regime::AsymmetricPlainMin: {
      require(plain && asym, "needs plain p < q, r = 0");
      const double d = 1 - 2 * p;
      return from_mean_second(d * nn + p / d,
                              d * d * nn * nn + 2 * (3 - 2 * p) * p * nn - (3 - 4 * p) * p / (d * d));
    }
    case Regime::AsymmetricPlainCross: {
      require(plain && asym, "needs plain p < q, r = 0");
      const double d = 1 - 2 * p;
      Moments m = asymmetric_max(p);
      m.cross_moment = p * nn - (2 - 3 * p) * p / (d * d);
      return m;
    }
    case Regime::ReflectedSymmetric:
      require(is_reflected(params) && params.is_symmetric() && !params.is_lazy(),
              "needs reflected p = q = 1/2");
      return from_mean_second(std::sqrt(std::numbers::pi * nn / 2), 2 * g * nn);
    case Regime::LazyReflected:
      require(is_reflected(params) && params.is_symmetric() && params.is_lazy(),
              "needs reflected p = q, r > 0");
      return from_mean_second(std::sqrt(std::numbers::pi * (1 - r) * nn / 2), 2 * g * (1 - r) * nn);
    case Regime::TrafficLight:
      require(params.mode() == Mode::TrafficLight, "needs the traffic-light walk");
      return from_mean_second(std::sqrt(std::numbers::pi * nn / 12), g * nn / 3);
    case Regime::PersistentSymmetric: {
      require(persistent_alpha.has_value(), "needs alpha");
      const double alpha = *persistent_alpha;
      require(alpha > 0 && alpha < 1, "needs 0 < alpha < 1");
      const double ratio = alpha / (1 - alpha);
      const double root = std::sqrt(ratio);
      const double mean = root * (std::sqrt(2 * nn / std::numbers::pi) - 0.5 * root);
      const double variance = ratio * (1 - 2 / std::numbers::pi) * nn;
      Moments m{};
      m.mean = mean;
      m.variance = variance;
      m.second_moment = variance + mean * mean;
      return m;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown regime");
}

long double catalan_partial_sum(int terms) {
  long double s = 0;
  for (int k = 0; k < terms; ++k) {
    const long double d = 2.0L * k + 1;
    s += (k % 2 == 0 ? 1 : -1) / (d * d);
  }
  return s;
}

long double catalan_constant(long double tol) {
  if (!(tol >= 1e-14L)) throw Error(ErrorCode::InvalidArgument, "tolerance must be >= 1e-14");
  // Averaging neighbours of an alternating partial-sum sequence repeatedly
  // collapses the oscillation; the apex of the triangle is the estimate.
  auto transformed = [](int count) {
    std::vector<long double> s(static_cast<std::size_t>(count));
    long double acc = 0;
    for (int k = 0; k < count; ++k) {
      const long double d = 2.0L * k + 1;
      acc += (k % 2 == 0 ? 1 : -1) / (d * d);
      s[k] = acc;
    }
    for (int level = count - 1; level > 0; --level) {
      for (int i = 0; i < level; ++i) s[i] = (s[i] + s[i + 1]) / 2;
    }
    return s[0];
  };
  long double prev = transformed(8);
  for (int count = 16; count <= 1024; count *= 2) {
    const long double cur = transformed(count);
    if (std::fabs(cur - prev) < tol / 4) return cur;
    prev = cur;
  }
  return prev;
}

double sech_limit_probe(double t, ProbeScenario scenario) {
  check_probe(t);
  double sum = 0;
  for (int a = 1;; ++a) {
    const double s = 1 / std::cosh(probe_arg(a, t, scenario));
    if (s < 1e-18) break;
    sum += s;
  }
  return std::sqrt(2 / std::numbers::pi) * t * sum;
}

double second_moment_probe(double t, ProbeScenario scenario) {
  check_probe(t);
  double sum = 0;
  for (int a = 1;; ++a) {
    const double arg = probe_arg(a, t, scenario);
    const double term = arg / std::cosh(arg);
    if (arg > 1 && term < 1e-18) break;
    sum += term;
  }
  return t * sum;
}

}  // namespace rwalk
