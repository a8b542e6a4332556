#include "rwalk/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "rwalk/asymptotics.hpp"
#include "rwalk/cycles.hpp"
#include "rwalk/error.hpp"
#include "rwalk/extrema_joint.hpp"
#include "rwalk/oracle.hpp"
#include "rwalk/reflect.hpp"

namespace rwalk {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

struct Case {
  std::string name;
  Check check;
};

const std::vector<Rational>& test_ps() {
  static const std::vector<Rational> ps{Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  return ps;
}

WalkParams plain(const Rational& p) { return WalkParams(p, Rational(1) - p); }

std::string mismatch(const std::string& what, int n, const Rational& p) {
  return what + " differs at n=" + std::to_string(n) + ", p=" + p.to_string();
}

std::string near(const std::string& what, double value, double target, double tol) {
  if (std::fabs(value - target) <= tol) return "";
  std::ostringstream os;
  os.precision(12);
  os << what << " = " << value << ", expected " << target << " ± " << tol;
  return os.str();
}

std::vector<Case> cross_method_cases() {
  return {
      {"strong: matrix = recurrence = series, n <= 16",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= 16; ++n) {
             const auto m = strong_pmf_matrix(n, plain(p));
             if (m != strong_pmf_recurrence(n, plain(p)) || m != strong_pmf_series(n, plain(p))) {
               return mismatch("strong pmf", n, p);
             }
           }
         }
         return std::string();
       }},
      {"weak: matrix = recurrence = series, n <= 16",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= 16; ++n) {
             const auto m = weak_pmf_matrix(n, plain(p));
             if (m != weak_pmf_recurrence(n, plain(p)) || m != weak_pmf_series(n, plain(p))) {
               return mismatch("weak pmf", n, p);
             }
           }
         }
         return std::string();
       }},
      {"joint: exit-law recurrence = band inclusion-exclusion, n <= 10",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 0; n <= 10; ++n) {
             if (joint_pmf(n, plain(p)) != joint_pmf_band(n, plain(p))) return mismatch("joint pmf", n, p);
           }
         }
         return std::string();
       }},
      {"marginals: reflection sum = band DP, n <= 16",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 0; n <= 16; ++n) {
             for (const Side side : {Side::Plus, Side::Minus}) {
               if (marginal_max_pmf(n, side, plain(p)) !=
                   marginal_max_pmf_band(n, side, plain(p), Arithmetic::Exact)) {
                 return mismatch("marginal pmf", n, p);
               }
             }
           }
         }
         return std::string();
       }},
      {"cross moment: band DP = joint table, n <= 10",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= 10; ++n) {
             if (cross_moment_exact(n, plain(p)) != joint_pmf(n, plain(p)).cross_moment()) {
               return mismatch("cross moment", n, p);
             }
           }
         }
         return std::string();
       }},
  };
}

std::vector<Case> oracle_cases() {
  constexpr int kN = 12;
  return {
      {"joint and marginals vs enumeration, n <= 12",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= kN; ++n) {
             const auto truth = enumerate_joint(n, plain(p));
             if (joint_pmf(n, plain(p)) != truth) return mismatch("joint pmf", n, p);
             if (marginal_max_pmf(n, Side::Plus, plain(p)) != truth.marginal_plus()) {
               return mismatch("max pmf", n, p);
             }
             if (marginal_max_pmf(n, Side::Minus, plain(p)) != truth.marginal_minus()) {
               return mismatch("min pmf", n, p);
             }
           }
         }
         return std::string();
       }},
      {"max |S| vs enumeration, n <= 12",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= kN; ++n) {
             if (max_abs_pmf(n, plain(p), Arithmetic::Exact) !=
                 enumerate_pmf(n, plain(p), WalkStatistic::MaxAbs)) {
               return mismatch("max-abs pmf", n, p);
             }
           }
         }
         return std::string();
       }},
      {"reflected maxima vs enumeration, n <= 12",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= kN; ++n) {
             const auto strong = plain(p).with_mode(Mode::StrongReflect);
             const auto weak = plain(p).with_mode(Mode::WeakReflect);
             if (strong_pmf_recurrence(n, strong) != enumerate_pmf(n, strong, WalkStatistic::ReflectedMax)) {
               return mismatch("strong pmf", n, p);
             }
             if (weak_pmf_recurrence(n, weak) != enumerate_pmf(n, weak, WalkStatistic::ReflectedMax)) {
               return mismatch("weak pmf", n, p);
             }
           }
         }
         return std::string();
       }},
      {"lazy walks (r = 1/3) vs enumeration, n <= 8",
       [] {
         const WalkParams lazy(Rational(1, 3), Rational(1, 3), Rational(1, 3));
         for (int n = 1; n <= 8; ++n) {
           if (joint_pmf_band(n, lazy) != enumerate_joint(n, lazy)) return mismatch("lazy joint", n, lazy.p());
           for (const Mode mode : {Mode::StrongReflect, Mode::WeakReflect}) {
             const auto params = lazy.with_mode(mode);
             const auto refl = reflection_of(params);
             if (reflected_pmf(n, params, refl, ReflectMethod::Matrix) !=
                 enumerate_pmf(n, params, WalkStatistic::ReflectedMax)) {
               return mismatch("lazy reflected pmf", n, lazy.p());
             }
           }
         }
         return std::string();
       }},
  };
}

std::vector<Case> marginal_cases() {
  return {
      {"symmetric closed form C(n, floor((n-k)/2)) / 2^n",
       [] {
         for (int n = 0; n <= 20; ++n) {
           if (symmetric_max_pmf(n) != marginal_max_pmf(n, Side::Plus, WalkParams::symmetric())) {
             return mismatch("symmetric max pmf", n, Rational(1, 2));
           }
         }
         return std::string();
       }},
      {"E(M^2) + E(M) = n at p = 1/2, n <= 64",
       [] {
         for (int n = 0; n <= 64; ++n) {
           if (symmetric_max_mean(n) + symmetric_max_second_moment(n) != Rational(n)) {
             return "identity fails at n=" + std::to_string(n);
           }
         }
         return std::string();
       }},
      {"weak reflection: P{M_n = 0} = q^n",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= 16; ++n) {
             if (weak_pmf_matrix(n, plain(p)).exact_at(0) != (Rational(1) - p).pow(n)) {
               return mismatch("P{M=0}", n, p);
             }
           }
         }
         return std::string();
       }},
      {"strong reflection dominates weak, n <= 12",
       [] {
         for (const auto& p : test_ps()) {
           for (int n = 1; n <= 12; ++n) {
             if (!dominates(strong_pmf_matrix(n, plain(p)), weak_pmf_matrix(n, plain(p)))) {
               return mismatch("dominance", n, p);
             }
           }
         }
         return std::string();
       }},
  };
}

std::vector<Case> constant_cases() {
  const WalkParams third(Rational(1, 3), Rational(2, 3));
  return {
      {"cycle maximum mean at p = 1/3",
       [third] { return near("E(M_T)", static_cast<double>(cycle_max_moments(third).mean), 1.6066951524, 1e-9); }},
      {"cycle maximum second moment at p = 1/3",
       [third] {
         return near("E(M_T^2)", static_cast<double>(cycle_max_moments(third).second_moment), 3.8813726251, 1e-9);
       }},
      {"Catalan's constant",
       [] { return near("G", static_cast<double>(catalan_constant()), 0.9159655941, 1e-10); }},
      {"Euler's constant",
       [] { return near("gamma", static_cast<double>(euler_gamma()), 0.5772156649015329, 1e-12); }},
      {"record of copies: tail sum = pmf-weighted sum",
       [third] {
         for (const std::uint64_t n : {1ULL, 2ULL, 10ULL, 100ULL}) {
           const long double a = record_of_copies_mean(n, third, CopiesRoute::TailSum);
           const long double b = record_of_copies_mean(n, third, CopiesRoute::PmfWeighted);
           if (std::fabs(static_cast<double>(a - b)) > 1e-12) return "routes differ at n=" + std::to_string(n);
         }
         return std::string();
       }},
  };
}

std::vector<Case> asymptotic_cases() {
  const double root_half_pi = std::sqrt(std::numbers::pi / 2);
  return {
      {"sech probe (strong) at t = 0.001",
       [=] { return near("probe", sech_limit_probe(0.001, ProbeScenario::Strong), root_half_pi, 0.002); }},
      {"sech probe (weak) at t = 0.001",
       [=] { return near("probe", sech_limit_probe(0.001, ProbeScenario::Weak), root_half_pi, 0.002); }},
      {"second-moment probe at t = 0.001",
       [] {
         const double two_g = 2 * static_cast<double>(catalan_constant());
         return near("probe", second_moment_probe(0.001, ProbeScenario::Strong), two_g, 0.005);
       }},
      {"asymmetric maxima at p = 1/3, n = 200",
       [] {
         const WalkParams third(Rational(1, 3), Rational(2, 3));
         const double plus = pmf_moments(marginal_max_pmf(200, Side::Plus, third)).mean;
         const double minus = pmf_moments(marginal_max_pmf(200, Side::Minus, third)).mean;
         std::string out = near("E(M+)", plus, 1.0, 1e-4);
         return out.empty() ? near("E(M-)", minus, 203.0 / 3, 0.02) : out;  // (1-2p)n + p/(1-2p)
       }},
      {"reflected symmetric walk at n = 2000 (5% band)",
       [=] {
         const auto params = WalkParams::symmetric();
         for (const Reflection r : {Reflection::Strong, Reflection::Weak}) {
           const auto m = reflected_max_moments_float(2000, params, r);
           const double ratio = m.mean / std::sqrt(2000.0);
           if (std::fabs(ratio / root_half_pi - 1) > 0.05) return near("E(M)/sqrt(n)", ratio, root_half_pi, 0.05);
         }
         return std::string();
       }},
  };
}

std::vector<Case> cases_for(const std::string& suite) {
  if (suite == "cross-method") return cross_method_cases();
  if (suite == "oracle") return oracle_cases();
  if (suite == "marginals") return marginal_cases();
  if (suite == "constants") return constant_cases();
  if (suite == "asymptotics") return asymptotic_cases();
  throw Error(ErrorCode::InvalidArgument, "unknown suite: " + suite);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cross-method", "oracle", "marginals", "constants",
                                              "asymptotics"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  const std::vector<std::string> selected =
      suite == "all" ? suite_names() : std::vector<std::string>{suite};
  for (const auto& name : selected) {
    for (const auto& c : cases_for(name)) {
      CheckResult row{name, c.name, false, ""};
      try {
        row.detail = c.check();
        row.passed = row.detail.empty();
      } catch (const std::exception& e) {
        row.detail = std::string("exception: ") + e.what();
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace rwalk
