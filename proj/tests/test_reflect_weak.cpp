#include <gtest/gtest.h>

#include "reflect_test_util.hpp"
#include "rwalk/error.hpp"
#include "rwalk/oracle.hpp"
#include "rwalk/reflect.hpp"

using namespace rwalk;

namespace {

WalkParams weak(const Rational& p, const Rational& r = 0) {
  return WalkParams(p, Rational(1) - p - r, r, Mode::WeakReflect);
}

WalkParams strong(const Rational& p) {
  return WalkParams(p, Rational(1) - p, 0, Mode::StrongReflect);
}

const std::vector<Rational> kPs{Rational(1, 2), Rational(1, 3), Rational(2, 5)};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no rwalk::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(WeakChain, BoundaryRow) {
  const ReflectChain k(3, weak(Rational(1, 3)), Reflection::Weak);
  EXPECT_EQ(k.entry(0, 0), Rational(2, 3));
  EXPECT_EQ(k.entry(0, 1), Rational(1, 3));
  EXPECT_EQ(k.entry(3, 3), Rational(1));
}

TEST(WeakPmf, SmallHorizons) {
  const Rational p(1, 3), q(2, 3);
  for (const auto m : {ReflectMethod::Matrix, ReflectMethod::Recurrence, ReflectMethod::Series}) {
    EXPECT_EQ(reflected_pmf(1, weak(p), Reflection::Weak, m), Pmf::exact({{0, q}, {1, p}}));
    EXPECT_EQ(reflected_pmf(2, weak(p), Reflection::Weak, m),
              Pmf::exact({{0, q * q}, {1, Rational(2) * p * q}, {2, p * p}}));
  }
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(weak_pmf_matrix(n, weak(p)).exact_at(0), q.pow(n));
}

TEST(WeakPmf, ThreeMethodsAgree) {
  for (const auto& p : kPs) {
    for (int n = 1; n <= 20; ++n) {
      const Pmf m = weak_pmf_matrix(n, weak(p));
      EXPECT_EQ(weak_pmf_recurrence(n, weak(p)), m) << n << " " << p;
      EXPECT_EQ(weak_pmf_series(n, weak(p)), m) << n << " " << p;
    }
  }
}

TEST(WeakPmf, MatchesOracle) {
  for (const auto& p : kPs) {
    for (int n = 1; n <= 12; ++n) {
      EXPECT_EQ(weak_pmf_recurrence(n, weak(p)), enumerate_pmf(n, weak(p), WalkStatistic::ReflectedMax));
    }
  }
}

TEST(WeakPmf, LazyMatchesOracle) {
  const auto lazy = weak(Rational(1, 3), Rational(1, 3));
  for (int n = 1; n <= 9; ++n) {
    const Pmf truth = enumerate_pmf(n, lazy, WalkStatistic::ReflectedMax);
    EXPECT_EQ(weak_pmf_matrix(n, lazy), truth) << n;
    EXPECT_EQ(weak_pmf_recurrence(n, lazy), truth) << n;
    EXPECT_EQ(truth.exact_at(0), Rational(2, 3).pow(n));
  }
  EXPECT_EQ(code_of([&] { weak_pmf_series(3, lazy); }), ErrorCode::InvalidParams);
}

TEST(WeakGf, DiagonalAtZero) {
  for (const auto& p : kPs) {
    const Rational q = Rational(1) - p;
    const int order = 10;
    const PowerSeries lambda = PowerSeries::monomial(q, 1, order);
    const PowerSeries closed = series_div(lambda, PowerSeries::constant(1, order) - lambda);
    EXPECT_EQ(weak_gf_diagonal(0, order, weak(p)), closed);
  }
}

TEST(WeakGf, DiagonalMatchesPaths) {
  for (const auto& p : kPs) {
    const auto params = weak(p);
    for (int a = 1; a <= 4; ++a) {
      const PowerSeries g = weak_gf_diagonal(a, 12, params);
      const auto truth = test_util::diagonal_by_paths(a, 12, params, false);
      for (int n = 1; n <= 12; ++n) EXPECT_EQ(g[n], truth[n]) << a << " " << n;
    }
  }
}

TEST(WeakGf, MarginalAtOneClosedForm) {
  for (const auto& p : kPs) {
    const Rational q = Rational(1) - p;
    const int order = 12;
    const PowerSeries one = PowerSeries::constant(1, order);
    const PowerSeries ql = PowerSeries::monomial(q, 1, order);
    const PowerSeries den = (one - ql) * (one - ql - PowerSeries::monomial(p * q, 2, order));
    const PowerSeries closed = series_div(PowerSeries::monomial(p, 1, order), den);
    const PowerSeries g = weak_gf_marginal(1, order, weak(p));
    EXPECT_EQ(g, closed);
    EXPECT_EQ(g[2], Rational(2) * p * q);
  }
}

TEST(WeakGf, MarginalsAreTheLawOfTheMaximum) {
  const int order = 12;
  for (const auto& p : kPs) {
    const auto params = weak(p);
    std::vector<PowerSeries> marginals;
    for (int a = 0; a <= order; ++a) marginals.push_back(weak_gf_marginal(a, order, params));
    for (int n = 1; n <= order; ++n) {
      const Pmf pmf = weak_pmf_matrix(n, params);
      Rational total(0);
      for (int a = 0; a <= order; ++a) {
        EXPECT_EQ(marginals[a][n], pmf.exact_at(a)) << n << " " << a;
        total += marginals[a][n];
      }
      EXPECT_EQ(total, Rational(1));
    }
  }
}

TEST(WeakVsStrong, StrongDominates) {
  for (const auto& p : kPs) {
    for (int n = 1; n <= 12; ++n) {
      EXPECT_TRUE(dominates(strong_pmf_recurrence(n, strong(p)), weak_pmf_recurrence(n, weak(p))))
          << n << " " << p;
    }
    for (int n : {200, 800}) {
      const double es = reflected_max_moments_float(n, strong(p), Reflection::Strong).mean;
      const double ew = reflected_max_moments_float(n, weak(p), Reflection::Weak).mean;
      EXPECT_GE(es, ew);
    }
  }
}

TEST(WeakFloat, MatchesExactAndIsSchedulingFree) {
  const auto params = weak(Rational(1, 2));
  const Pmf exact = weak_pmf_recurrence(120, params);
  const Pmf serial = reflected_pmf_float(120, params, Reflection::Weak, Exec::Serial);
  for (int a = 0; a <= 120; ++a) EXPECT_NEAR(serial.at(a), exact.at(a), 1e-13);
  EXPECT_EQ(reflected_pmf_float(120, params, Reflection::Weak, Exec::Parallel), serial);
  EXPECT_EQ(reflection_of(params), Reflection::Weak);
}
