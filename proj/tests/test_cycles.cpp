#include <gtest/gtest.h>

#include <cmath>

#include "rwalk/cycles.hpp"
#include "rwalk/error.hpp"

using namespace rwalk;

namespace {

const WalkParams kThird(Rational(1, 3), Rational(2, 3));
const WalkParams kTwoFifths(Rational(2, 5), Rational(3, 5));

// Σ_{k>=1} f(k) in long double, stopping once terms stay below 1e-22.
long double series(auto&& f) {
  long double total = 0;
  for (int k = 1; k < 100000; ++k) {
    const long double t = f(k);
    total += t;
    if (k > 8 && std::fabs(t) < 1e-22L) break;
  }
  return total;
}

}  // namespace

TEST(CycleLaw, SmallValues) {
  const CycleLaw law(kThird);
  EXPECT_EQ(law.x(), Rational(1, 2));
  EXPECT_EQ(law.cdf_below(1), Rational(0));
  EXPECT_EQ(law.cdf_below(2), Rational(2, 3));
  EXPECT_EQ(law.pmf_at(1), Rational(2, 3));
  const auto point = cycle_max_distribution(3, kThird);
  EXPECT_EQ(point.cdf_below_k, Rational(6, 7));
  EXPECT_EQ(point.pmf_at_k, Rational(14, 15) - Rational(6, 7));
}

TEST(CycleLaw, PmfIsCdfDifference) {
  for (const auto& params : {kThird, kTwoFifths}) {
    const CycleLaw law(params);
    for (int k = 1; k <= 20; ++k) {
      EXPECT_EQ(law.pmf_at(k), law.cdf_below(k + 1) - law.cdf_below(k)) << k;
      EXPECT_LT(law.cdf_below(k), law.cdf_below(k + 1));
    }
  }
}

TEST(CycleLaw, MassSumsToOne) {
  const CycleLaw law(kThird);
  long double total = 0;
  for (int k = 1; k <= 60; ++k) total += law.pmf_at(k).to_double();
  EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-15);
}

TEST(CycleLaw, SymmetricUnsupported) {
  try {
    CycleLaw law{WalkParams::symmetric()};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SymmetricUnsupported);
  }
}

TEST(CycleMoments, KnownConstantsAtOneThird) {
  const CycleMoments m = cycle_max_moments(kThird);
  EXPECT_NEAR(static_cast<double>(m.mean), 1.6066951524, 1e-9);
  EXPECT_NEAR(static_cast<double>(m.second_moment), 3.8813726251, 1e-9);
  EXPECT_NEAR(static_cast<double>((m.second_moment + m.mean) / 2), 2.7440338887, 1e-9);
  EXPECT_GT(m.terms, 30);
}

TEST(CycleMoments, MatchPmfSums) {
  const CycleLaw law(kTwoFifths);
  const long double x = 2.0L / 3.0L;
  // Mass from the closed form, independent of the Rational path.
  auto pmf = [&](int k) {
    return (1 / x - 1) * (std::pow(x, k) / (1 - std::pow(x, k)) -
                          std::pow(x, k + 1) / (1 - std::pow(x, k + 1)));
  };
  const long double mean = series([&](int k) { return k * pmf(k); });
  const long double second = series([&](int k) { return 1.0L * k * k * pmf(k); });
  const CycleMoments m = cycle_max_moments(kTwoFifths);
  EXPECT_NEAR(static_cast<double>(m.mean), static_cast<double>(mean), 1e-13);
  EXPECT_NEAR(static_cast<double>(m.second_moment), static_cast<double>(second), 1e-11);
  EXPECT_NEAR(law.pmf_at(5).to_double(), static_cast<double>(pmf(5)), 1e-16);
}

TEST(RecordOfCopies, SingleCopyIsCycleMean) {
  for (const auto& params : {kThird, kTwoFifths}) {
    const long double mean = cycle_max_moments(params).mean;
    for (auto route : {CopiesRoute::TailSum, CopiesRoute::PmfWeighted}) {
      EXPECT_NEAR(static_cast<double>(record_of_copies_mean(1, params, route)),
                  static_cast<double>(mean), 1e-13);
    }
  }
}

TEST(RecordOfCopies, TwoCopiesDirectSum) {
  const long double direct = series([](int k) {
    const long double below = 1 - 1 / (std::pow(2.0L, k) - 1);  // P{M_T < k}, x = 1/2
    const long double c = k == 1 ? 0.0L : below;
    return 1 - c * c;
  });
  EXPECT_NEAR(static_cast<double>(record_of_copies_mean(2, kThird)), static_cast<double>(direct), 1e-13);
}

TEST(RecordOfCopies, RoutesAgreeAndGrow) {
  for (const auto& params : {kThird, kTwoFifths}) {
    long double prev = 0;
    for (std::uint64_t n = 1; n <= (1u << 20); n *= 4) {
      const long double tail = record_of_copies_mean(n, params, CopiesRoute::TailSum);
      const long double weighted = record_of_copies_mean(n, params, CopiesRoute::PmfWeighted);
      EXPECT_NEAR(static_cast<double>(tail), static_cast<double>(weighted), 1e-12 * static_cast<double>(tail));
      EXPECT_GT(tail, prev);
      prev = tail;
    }
  }
}

TEST(RecordOfCopies, LogarithmicGrowth) {
  const std::uint64_t n = 1u << 20;
  const double ratio = static_cast<double>(record_of_copies_mean(n, kThird)) / std::log(double(n));
  EXPECT_NEAR(ratio, 1 / std::log(2.0), 0.02 / std::log(2.0));
}

TEST(Knuth, EulerGamma) {
  EXPECT_NEAR(static_cast<double>(euler_gamma()), 0.57721566490153286, 1e-12);
}

TEST(Knuth, ResidualAgainstPrintedFormIsMinusOne) {
  for (std::uint64_t n : {1ull << 10, 1ull << 16, 1ull << 20}) {
    const KnuthEstimate k = knuth_asymptotic(n);
    EXPECT_NEAR(static_cast<double>(k.residual), -1.0, 0.01) << n;
    EXPECT_LE(std::fabs(static_cast<double>(k.shifted_residual)), 0.01) << n;
    EXPECT_NEAR(static_cast<double>(k.exact_mean),
                static_cast<double>(record_of_copies_mean(n, kThird, CopiesRoute::PmfWeighted)), 1e-10);
  }
  EXPECT_LT(std::fabs(static_cast<double>(knuth_asymptotic(1ull << 20).shifted_residual)), 1e-4);
}
