#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rwalk/asymptotics.hpp"
#include "rwalk/error.hpp"

using namespace rwalk;

namespace {

constexpr double kG = 0.915965594177219015;
const WalkParams kThird(Rational(1, 3), Rational(2, 3));

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no rwalk::Error thrown";
  return ErrorCode::InvalidArgument;
}

// ∫₀^∞ f by composite Simpson on [0, 60].
double integral(auto&& f) {
  const int steps = 600000;
  const double h = 60.0 / steps;
  double s = f(0.0) + f(60.0);
  for (int i = 1; i < steps; ++i) s += (i % 2 ? 4 : 2) * f(i * h);
  return s * h / 3;
}

}  // namespace

TEST(Predictors, AsymmetricAtOneThird) {
  const Moments m = predict_moments(Regime::AsymmetricPlainMax, 100, kThird);
  EXPECT_DOUBLE_EQ(m.mean, 1.0);
  EXPECT_DOUBLE_EQ(m.second_moment, 3.0);
  const Moments lo = predict_moments(Regime::AsymmetricPlainMin, 200, kThird);
  EXPECT_NEAR(lo.mean, 203.0 / 3.0, 1e-12);
  const Moments cross = predict_moments(Regime::AsymmetricPlainCross, 300, kThird);
  EXPECT_NEAR(*cross.cross_moment, 100.0 - 3.0, 1e-12);
}

TEST(Predictors, SymmetricIdentity) {
  for (int n : {1, 10, 1000, 123457}) {
    const Moments m = predict_moments(Regime::SymmetricPlainMax, n, WalkParams::symmetric());
    EXPECT_NEAR(m.mean + m.second_moment, n, 1e-9 * n);
  }
  const Moments c = predict_moments(Regime::SymmetricPlainCross, 1000, WalkParams::symmetric());
  EXPECT_NEAR(*c.cross_moment / 1000, 2 * std::numbers::ln2 - 1, 1e-12);
}

TEST(Predictors, ReflectedVariants) {
  const double n = 1e4;
  const auto strong = WalkParams::symmetric(Mode::StrongReflect);
  const Moments refl = predict_moments(Regime::ReflectedSymmetric, n, strong);
  EXPECT_NEAR(refl.mean / std::sqrt(n), std::sqrt(std::numbers::pi / 2), 1e-12);
  EXPECT_NEAR(refl.second_moment / n, 2 * kG, 1e-12);

  const WalkParams lazy(Rational(1, 3), Rational(1, 3), Rational(1, 3), Mode::WeakReflect);
  const Moments l = predict_moments(Regime::LazyReflected, n, lazy);
  EXPECT_NEAR(l.mean / std::sqrt(n), 1.023, 5e-4);
  EXPECT_NEAR(l.mean / std::sqrt(n), std::sqrt(std::numbers::pi / 3), 1e-12);

  const Moments t = predict_moments(Regime::TrafficLight, n, WalkParams::traffic_light());
  EXPECT_NEAR(t.mean / std::sqrt(n), 0.512, 5e-4);
  EXPECT_NEAR(t.second_moment / n, kG / 3, 1e-12);

  const Moments pers = predict_moments(Regime::PersistentSymmetric, n, WalkParams::symmetric(), 0.7);
  const double ratio = 0.7 / 0.3;
  EXPECT_NEAR(pers.variance, ratio * (1 - 2 / std::numbers::pi) * n, 1e-9);
  EXPECT_NEAR(pers.mean, std::sqrt(ratio) * (std::sqrt(2 * n / std::numbers::pi) - 0.5 * std::sqrt(ratio)), 1e-9);
  const Moments half = predict_moments(Regime::PersistentSymmetric, n, WalkParams::symmetric(), 0.5);
  const Moments plain = predict_moments(Regime::SymmetricPlainMax, n, WalkParams::symmetric());
  EXPECT_NEAR(half.mean, plain.mean, 1e-9);
}

TEST(Predictors, RegimeMismatch) {
  const auto sym = WalkParams::symmetric();
  EXPECT_EQ(code_of([&] { predict_moments(Regime::AsymmetricPlainMax, 10, sym); }), ErrorCode::RegimeMismatch);
  EXPECT_EQ(code_of([&] { predict_moments(Regime::SymmetricPlainMax, 10, kThird); }), ErrorCode::RegimeMismatch);
  EXPECT_EQ(code_of([&] { predict_moments(Regime::ReflectedSymmetric, 10, sym); }), ErrorCode::RegimeMismatch);
  EXPECT_EQ(code_of([&] { predict_moments(Regime::LazyReflected, 10, sym.with_mode(Mode::WeakReflect)); }),
            ErrorCode::RegimeMismatch);
  EXPECT_EQ(code_of([&] { predict_moments(Regime::TrafficLight, 10, sym); }), ErrorCode::RegimeMismatch);
  EXPECT_EQ(code_of([&] { predict_moments(Regime::PersistentSymmetric, 10, sym); }), ErrorCode::RegimeMismatch);
  EXPECT_EQ(code_of([&] { predict_moments(Regime::PersistentSymmetric, 10, sym, 1.0); }), ErrorCode::RegimeMismatch);
  EXPECT_EQ(code_of([&] { predict_moments(Regime::SymmetricPlainMax, 0, sym); }), ErrorCode::InvalidArgument);
}

TEST(Catalan, Value) {
  EXPECT_NEAR(static_cast<double>(catalan_constant(1e-10L)), 0.9159655941, 1e-10);
  EXPECT_NEAR(static_cast<double>(2 * catalan_constant()), 1.8319311883, 2e-10);
  EXPECT_NEAR(static_cast<double>(catalan_constant()), kG, 1e-14);
  EXPECT_EQ(catalan_constant(1e-12L), catalan_constant(1e-12L));
  EXPECT_EQ(code_of([] { catalan_constant(1e-15L); }), ErrorCode::InvalidArgument);
}

TEST(Catalan, PartialSumsBracket) {
  const long double g = catalan_constant();
  for (int k = 1; k < 40; k += 2) {
    EXPECT_GT(catalan_partial_sum(k), g);
    EXPECT_LT(catalan_partial_sum(k + 1), g);
  }
}

TEST(Catalan, IntegralIsTwiceG) {
  const double v = integral([](double b) { return b / std::cosh(b); });
  EXPECT_NEAR(v, 2 * kG, 1e-9);
  const double s = integral([](double b) { return 1 / std::cosh(b); });
  EXPECT_NEAR(s, std::numbers::pi / 2, 1e-9);
}

TEST(Probes, Limits) {
  const double limit = std::sqrt(std::numbers::pi / 2);
  for (auto sc : {ProbeScenario::Strong, ProbeScenario::Weak}) {
    EXPECT_NEAR(sech_limit_probe(0.001, sc), limit, 0.002);
    EXPECT_NEAR(second_moment_probe(0.001, sc), 2 * kG, 0.005);
  }
}

TEST(Probes, IncreasingAsTShrinks) {
  double prev = 0;
  for (int i = 100; i >= 1; --i) {
    const double v = sech_limit_probe(i * 0.001, ProbeScenario::Strong);
    EXPECT_GT(v, prev) << i;
    prev = v;
  }
  EXPECT_LT(prev, std::sqrt(std::numbers::pi / 2));
}

TEST(Probes, StrongMinusWeakIsPositiveAndOrderT) {
  for (double t : {0.1, 0.01, 0.001}) {
    const double d = sech_limit_probe(t, ProbeScenario::Strong) - sech_limit_probe(t, ProbeScenario::Weak);
    EXPECT_GT(d, 0);
    EXPECT_LT(d, t);
  }
}

TEST(Probes, HalvingTChangesByOrderT) {
  for (auto sc : {ProbeScenario::Strong, ProbeScenario::Weak}) {
    for (double t : {0.02, 0.01, 0.005}) {
      EXPECT_LT(std::fabs(sech_limit_probe(t, sc) - sech_limit_probe(t / 2, sc)), t);
      EXPECT_LT(std::fabs(second_moment_probe(t, sc) - second_moment_probe(t / 2, sc)), t);
    }
  }
}

TEST(Probes, DomainChecked) {
  for (double t : {0.0, -0.1, 1.5, std::nan("")}) {
    EXPECT_EQ(code_of([&] { sech_limit_probe(t, ProbeScenario::Strong); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { second_moment_probe(t, ProbeScenario::Weak); }), ErrorCode::InvalidArgument);
  }
}
