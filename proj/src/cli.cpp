#include "rwalk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <variant>

#include "rwalk/asymptotics.hpp"
#include "rwalk/cycles.hpp"
#include "rwalk/error.hpp"
#include "rwalk/extrema_joint.hpp"
#include "rwalk/montecarlo.hpp"
#include "rwalk/reflect.hpp"
#include "rwalk/verify.hpp"

namespace rwalk {

namespace {

using Json = nlohmann::ordered_json;
using AnyPmf = std::variant<Pmf, JointPmf>;

// Thrown for a method disagreement; carries the diff for the error record.
struct Disagreement {
  std::string message;
  Json diff;
};

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

Json moments_json(const Moments& m) {
  Json j{{"mean", m.mean}, {"second_moment", m.second_moment}, {"variance", m.variance}};
  if (m.cross_moment) j["cross_moment"] = *m.cross_moment;
  if (m.exact) {
    j["exact"] = Json{{"mean", rational_json(m.exact->mean)},
                      {"second_moment", rational_json(m.exact->second_moment)},
                      {"variance", rational_json(m.exact->variance)}};
  }
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ------------------------------------------------------------- options

struct WalkFlags {
  std::string p = "1/2";
  std::string r = "0";
};

WalkParams make_params(const WalkFlags& flags, Mode mode) {
  const Rational p = Rational::parse(flags.p);
  const Rational r = Rational::parse(flags.r);
  return WalkParams(p, Rational(1) - p - r, r, mode);
}

Json params_json(const WalkParams& params) {
  return Json{{"p", rational_json(params.p())},
              {"q", rational_json(params.q())},
              {"r", rational_json(params.r())},
              {"mode", to_string(params.mode())}};
}

Json header(const std::string& command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

// ------------------------------------------------------------- pmf

struct PmfRequest {
  std::string stat = "max";
  int n = 0;
  WalkFlags walk;
  std::string method = "auto";
  std::string arith = "auto";
  std::string format = "json";
};

bool exact_requested(const PmfRequest& req) {
  if (req.arith == "auto") return req.n <= kReflectExactMaxN;
  return req.arith == "exact";
}

Mode mode_for(const std::string& stat) {
  if (stat == "strong") return Mode::StrongReflect;
  if (stat == "weak") return Mode::WeakReflect;
  return Mode::Plain;
}

std::vector<std::string> exact_methods(const std::string& stat, const WalkParams& params, int n) {
  const bool simple = !params.is_lazy();
  if (stat == "max" || stat == "min") {
    if (!simple) return {"band"};
    return {"series", "recurrence", "band"};
  }
  if (stat == "joint") return simple ? std::vector<std::string>{"recurrence", "band"}
                                     : std::vector<std::string>{"band"};
  if (stat == "maxabs") return {"band"};
  std::vector<std::string> out{"matrix", "recurrence"};
  if (simple && !params.p().is_zero() && n <= kSeriesMaxN) out.push_back("series");
  return out;
}

[[noreturn]] void unsupported(const std::string& stat, const std::string& method, const std::string& arith) {
  throw Error(ErrorCode::InvalidArgument,
              "method '" + method + "' with arithmetic '" + arith + "' is not available for --stat " + stat);
}

AnyPmf compute_exact(const std::string& stat, int n, const WalkParams& params, const std::string& method) {
  if (stat == "max" || stat == "min") {
    const Side side = stat == "max" ? Side::Plus : Side::Minus;
    if (method == "series") return marginal_max_pmf(n, side, params);
    if (method == "recurrence") {
      const JointPmf joint = joint_pmf(n, params);
      return side == Side::Plus ? joint.marginal_plus() : joint.marginal_minus();
    }
    if (method == "band") return marginal_max_pmf_band(n, side, params, Arithmetic::Exact);
  } else if (stat == "joint") {
    if (method == "recurrence") return joint_pmf(n, params);
    if (method == "band") return joint_pmf_band(n, params);
  } else if (stat == "maxabs") {
    if (method == "band") return max_abs_pmf(n, params, Arithmetic::Exact);
  } else {
    const Reflection refl = reflection_of(params);
    if (method == "matrix") return reflected_pmf(n, params, refl, ReflectMethod::Matrix);
    if (method == "recurrence") return reflected_pmf(n, params, refl, ReflectMethod::Recurrence);
    if (method == "series") return reflected_pmf(n, params, refl, ReflectMethod::Series);
  }
  unsupported(stat, method, "exact");
}

AnyPmf compute_float(const std::string& stat, int n, const WalkParams& params, const std::string& method) {
  if (stat == "joint") unsupported(stat, method, "float");
  if (stat == "max" || stat == "min") {
    if (method != "auto" && method != "band") unsupported(stat, method, "float");
    return marginal_max_pmf_band(n, stat == "max" ? Side::Plus : Side::Minus, params, Arithmetic::Float);
  }
  if (stat == "maxabs") {
    if (method != "auto" && method != "band") unsupported(stat, method, "float");
    return max_abs_pmf(n, params, Arithmetic::Float);
  }
  if (method != "auto" && method != "matrix") unsupported(stat, method, "float");
  return reflected_pmf_float(n, params, reflection_of(params));
}

Json pmf_rows(const AnyPmf& pmf) {
  Json rows = Json::array();
  if (const auto* joint = std::get_if<JointPmf>(&pmf)) {
    for (const auto& [key, mass] : joint->entries()) {
      rows.push_back(Json{{"value", Json::array({key.first, key.second})},
                          {"prob_num", mass.numerator().get_str()},
                          {"prob_den", mass.denominator().get_str()},
                          {"prob_float", mass.to_double()}});
    }
    return rows;
  }
  const Pmf& p = std::get<Pmf>(pmf);
  for (std::size_t i = 0; i < p.support().size(); ++i) {
    Json row{{"value", p.support()[i]}};
    if (p.is_exact()) {
      const Rational& mass = p.exact_probabilities()[i];
      row["prob_num"] = mass.numerator().get_str();
      row["prob_den"] = mass.denominator().get_str();
    } else {
      row["prob_num"] = nullptr;
      row["prob_den"] = nullptr;
    }
    row["prob_float"] = p.probabilities()[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

// Value → probability string per method, for the disagreement dump.
Json disagreement_diff(const std::vector<std::string>& methods, const std::vector<AnyPmf>& results) {
  std::map<std::string, Json> by_value;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    for (const auto& row : pmf_rows(results[m])) {
      const std::string key = row["value"].dump();
      by_value[key][methods[m]] = row["prob_num"].get<std::string>() + "/" + row["prob_den"].get<std::string>();
    }
  }
  Json diff = Json::array();
  for (auto& [value, per_method] : by_value) {
    bool same = per_method.size() == methods.size();
    for (const auto& [name, v] : per_method.items()) same = same && v == per_method.begin().value();
    if (!same) diff.push_back(Json{{"value", Json::parse(value)}, {"methods", per_method}});
  }
  return diff;
}

AnyPmf compute_checked(const PmfRequest& req, const WalkParams& params, std::string& used) {
  const auto methods = exact_methods(req.stat, params, req.n);
  std::vector<AnyPmf> results;
  for (const auto& m : methods) results.push_back(compute_exact(req.stat, req.n, params, m));
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i] != results[0]) {
      throw Disagreement{"methods disagree for --stat " + req.stat, disagreement_diff(methods, results)};
    }
  }
  used = "all(";
  for (std::size_t i = 0; i < methods.size(); ++i) used += (i ? "," : "") + methods[i];
  used += ")";
  return results.front();
}

AnyPmf compute_pmf(const PmfRequest& req, const WalkParams& params, std::string& used) {
  if (req.n < 0) throw Error(ErrorCode::InvalidArgument, "--n must be >= 0");
  const bool exact = exact_requested(req);
  if (req.method == "all") {
    if (!exact) throw Error(ErrorCode::InvalidArgument, "--method all compares exact results");
    return compute_checked(req, params, used);
  }
  used = req.method;
  if (!exact) {
    if (used == "auto") used = req.stat == "strong" || req.stat == "weak" ? "matrix" : "band";
    return compute_float(req.stat, req.n, params, req.method);
  }
  if (used == "auto") {
    used = exact_methods(req.stat, params, req.n).front();
    if (req.stat == "strong" || req.stat == "weak") used = "recurrence";
  }
  return compute_exact(req.stat, req.n, params, used);
}

void emit_pmf(const PmfRequest& req, const WalkParams& params, const AnyPmf& pmf, const std::string& used,
              std::ostream& out) {
  const Json rows = pmf_rows(pmf);
  if (req.format == "csv") {
    out << "value,prob_num,prob_den,prob_float\n";
    for (const auto& row : rows) {
      const auto& v = row["value"];
      if (v.is_array()) {
        out << v[0].get<int>() << ':' << v[1].get<int>();
      } else {
        out << v.get<std::int64_t>();
      }
      out << ',' << (row["prob_num"].is_null() ? "" : row["prob_num"].get<std::string>()) << ','
          << (row["prob_den"].is_null() ? "" : row["prob_den"].get<std::string>()) << ','
          << format_double(row["prob_float"].get<double>()) << '\n';
    }
    return;
  }
  Json j = header("pmf");
  j["params"] = params_json(params);
  j["stat"] = req.stat;
  j["n"] = req.n;
  j["method"] = used;
  j["arith"] = std::holds_alternative<Pmf>(pmf) && !std::get<Pmf>(pmf).is_exact() ? "float" : "exact";
  j["rows"] = rows;
  out << j.dump(2) << '\n';
}

// ------------------------------------------------------------- moments

std::optional<Regime> regime_for(const std::string& stat, const WalkParams& params) {
  const bool sym = params.is_symmetric();
  const bool lazy = params.is_lazy();
  if (stat == "strong" || stat == "weak") {
    if (!sym) return std::nullopt;
    return lazy ? Regime::LazyReflected : Regime::ReflectedSymmetric;
  }
  if (lazy) return std::nullopt;
  if (stat == "max") return sym ? Regime::SymmetricPlainMax : Regime::AsymmetricPlainMax;
  if (stat == "min") return sym ? Regime::SymmetricPlainMax : Regime::AsymmetricPlainMin;
  if (stat == "cross") return sym ? Regime::SymmetricPlainCross : Regime::AsymmetricPlainCross;
  return std::nullopt;
}

Json run_moments(const PmfRequest& req, const WalkParams& params, bool predict) {
  Json j = header("moments");
  j["params"] = params_json(params);
  j["stat"] = req.stat;
  j["n"] = req.n;
  const bool exact = exact_requested(req);
  if (req.stat == "cross") {
    if (exact) {
      const Rational c = cross_moment_exact(req.n, params);
      j["result"] = Json{{"cross_moment", c.to_double()}, {"exact", Json{{"cross_moment", rational_json(c)}}}};
    } else {
      j["result"] = Json{{"cross_moment", cross_moment(req.n, params, CrossMethod::BandDP)}};
    }
  } else if (!exact && (req.stat == "strong" || req.stat == "weak")) {
    j["result"] = moments_json(reflected_max_moments_float(req.n, params, reflection_of(params)));
  } else {
    std::string used;
    const AnyPmf pmf = compute_pmf(req, params, used);
    if (std::holds_alternative<JointPmf>(pmf)) {
      throw Error(ErrorCode::InvalidArgument, "moments of the joint law: use --stat cross");
    }
    j["method"] = used;
    j["result"] = moments_json(pmf_moments(std::get<Pmf>(pmf)));
  }
  if (predict) {
    const auto regime = regime_for(req.stat, params);
    if (regime && req.n >= 1) {
      const Moments m = predict_moments(*regime, req.n, params.with_mode(
          req.stat == "strong" ? Mode::StrongReflect : req.stat == "weak" ? Mode::WeakReflect : Mode::Plain));
      Json pj = moments_json(m);
      if (req.stat == "min" && params.is_symmetric()) pj["note"] = "M- has the law of M+ when p = q";
      j["predicted"] = pj;
    } else {
      j["predicted"] = nullptr;
    }
  }
  return j;
}

// ------------------------------------------------------------- cycle

Json run_cycle(const std::string& p_text, std::optional<std::uint64_t> copies, bool knuth, int kmax) {
  const Rational p = Rational::parse(p_text);
  const WalkParams params(p, Rational(1) - p);
  const CycleLaw law(params);
  const CycleMoments m = cycle_max_moments(params);
  Json j = header("cycle");
  j["params"] = params_json(params);
  j["x"] = rational_json(law.x());
  j["mean"] = static_cast<double>(m.mean);
  j["second_moment"] = static_cast<double>(m.second_moment);
  j["terms"] = m.terms;
  Json rows = Json::array();
  for (int k = 1; k <= kmax; ++k) {
    const auto point = cycle_max_distribution(k, params);
    rows.push_back(Json{{"k", k},
                        {"cdf_below", rational_json(point.cdf_below_k)},
                        {"cdf_below_float", point.cdf_below_k.to_double()},
                        {"pmf", rational_json(point.pmf_at_k)},
                        {"pmf_float", point.pmf_at_k.to_double()}});
  }
  j["distribution"] = rows;
  if (copies) {
    j["copies"] = Json{
        {"n", *copies},
        {"mean_tail_sum", static_cast<double>(record_of_copies_mean(*copies, params, CopiesRoute::TailSum))},
        {"mean_pmf_weighted",
         static_cast<double>(record_of_copies_mean(*copies, params, CopiesRoute::PmfWeighted))}};
  }
  if (knuth) {
    if (p != Rational(1, 3)) throw Error(ErrorCode::InvalidArgument, "--knuth applies to p = 1/3");
    std::vector<std::uint64_t> ns;
    if (copies) {
      ns.push_back(*copies);
    } else {
      for (int e = 10; e <= 20; e += 2) ns.push_back(1ULL << e);
    }
    Json table = Json::array();
    for (const auto n : ns) {
      const KnuthEstimate est = knuth_asymptotic(n);
      table.push_back(Json{{"n", n},
                           {"exact_mean", static_cast<double>(est.exact_mean)},
                           {"asymptotic_mean", static_cast<double>(est.asymptotic_mean)},
                           {"residual", static_cast<double>(est.residual)},
                           {"shifted_residual", static_cast<double>(est.shifted_residual)}});
    }
    j["knuth"] = table;
  }
  return j;
}

// ------------------------------------------------------------- constants / probe

Json run_constants(double tol) {
  const WalkParams third(Rational(1, 3), Rational(2, 3));
  const long double g = catalan_constant(tol);
  const CycleMoments cm = cycle_max_moments(third);
  // Σ k/(2^k − 1) recovered from E(M_T²) = 2Σk/(2^k−1) − Σ1/(2^k−1) at x = 1/2.
  const long double weighted = (cm.second_moment + cm.mean) / 2;
  Json j = header("constants");
  j["tol"] = tol;
  j["constants"] = Json::array({
      Json{{"name", "catalan_G"}, {"value", static_cast<double>(g)},
           {"note", "alternating series sum (-1)^k/(2k+1)^2, iterated averaging of partial sums"}},
      Json{{"name", "two_G"}, {"value", static_cast<double>(2 * g)},
           {"note", "integral of b*sech(b) over (0, inf); limit of E(M_n^2)/n for reflected walks"}},
      Json{{"name", "sqrt_pi_over_2"}, {"value", std::sqrt(std::numbers::pi / 2)},
           {"note", "limit of E(M_n)/sqrt(n) for reflected walks; integral of sech times sqrt(2/pi)"}},
      Json{{"name", "euler_gamma"}, {"value", static_cast<double>(euler_gamma())},
           {"note", "H_N - ln N with Euler-Maclaurin corrections through 1/(120 N^4), N = 10^4"}},
      Json{{"name", "sum_1_over_2k_minus_1"}, {"value", static_cast<double>(cm.mean)},
           {"note", "Lambert-type series; equals E(M_T) at p = 1/3"}},
      Json{{"name", "sum_k_over_2k_minus_1"}, {"value", static_cast<double>(weighted)},
           {"note", "Lambert-type series; (E(M_T^2) + E(M_T)) / 2 at p = 1/3"}},
      Json{{"name", "cycle_second_moment_p_1_3"}, {"value", static_cast<double>(cm.second_moment)},
           {"note", "E(M_T^2) at p = 1/3"}},
  });
  return j;
}

Json run_probe(const std::string& scenario, double t, bool second) {
  ProbeScenario s;
  if (scenario == "strong") {
    s = ProbeScenario::Strong;
  } else if (scenario == "weak") {
    s = ProbeScenario::Weak;
  } else {
    throw Error(ErrorCode::InvalidArgument, "--scenario must be strong or weak");
  }
  const double value = second ? second_moment_probe(t, s) : sech_limit_probe(t, s);
  const double limit =
      second ? 2 * static_cast<double>(catalan_constant()) : std::sqrt(std::numbers::pi / 2);
  Json j = header("probe");
  j["scenario"] = scenario;
  j["t"] = t;
  j["quantity"] = second ? "second_moment" : "mean";
  j["value"] = value;
  j["limit"] = limit;
  j["difference"] = value - limit;
  return j;
}

// ------------------------------------------------------------- simulate

struct SimFlags {
  std::string variant = "plain";
  int n = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::optional<double> alpha;
  std::optional<std::string> p;
  std::optional<std::string> r;
  std::string reflect = "weak";
  int workers = 0;
};

Json run_simulate(const SimFlags& f) {
  SimConfig config;
  config.n = f.n;
  config.trials = f.trials;
  config.seed = f.seed;
  config.workers = f.workers;
  const std::set<SimStatistic> unreflected{SimStatistic::MaxPlus, SimStatistic::MinMinus, SimStatistic::MaxAbs,
                                           SimStatistic::CrossProduct};
  auto bernoulli = [&](const Rational& p, const Rational& r, Mode mode) {
    return WalkParams::unrestricted(p, Rational(1) - p - r, r, mode);
  };
  const Rational p = Rational::parse(f.p.value_or("1/2"));
  if (f.variant == "plain") {
    config.params = bernoulli(p, Rational::parse(f.r.value_or("0")), Mode::Plain);
    config.statistics = unreflected;
  } else if (f.variant == "strong" || f.variant == "weak") {
    config.params = bernoulli(p, Rational::parse(f.r.value_or("0")), mode_for(f.variant));
    config.statistics = {SimStatistic::ReflectedMax};
  } else if (f.variant == "lazy") {
    const Rational r = Rational::parse(f.r.value_or("1/3"));
    if (f.reflect != "strong" && f.reflect != "weak") {
      throw Error(ErrorCode::InvalidArgument, "--reflect must be strong or weak");
    }
    const Rational half_rest = (Rational(1) - r) / Rational(2);
    config.params = bernoulli(f.p ? p : half_rest, r, mode_for(f.reflect));
    config.statistics = {SimStatistic::ReflectedMax};
  } else if (f.variant == "traffic") {
    config.process = Process::TrafficLight;
    config.params = WalkParams::traffic_light();
    config.statistics = {SimStatistic::ReflectedMax};
  } else if (f.variant == "persistent") {
    if (!f.alpha) throw Error(ErrorCode::InvalidArgument, "--alpha is required for the persistent walk");
    config.process = Process::Persistent;
    config.persistent.alpha = *f.alpha;
    config.statistics = unreflected;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown --variant " + f.variant);
  }
  const SimResult res = simulate(config);
  Json j = header("simulate");
  j["variant"] = f.variant;
  if (config.process == Process::Bernoulli) j["params"] = params_json(config.params);
  if (config.process == Process::Persistent) j["alpha"] = config.persistent.alpha;
  j["n"] = f.n;
  j["trials"] = f.trials;
  j["seed"] = f.seed;
  j["generator"] = "philox4x32-10";
  Json est = Json::object();
  const double n = f.n;
  for (const auto& [stat, e] : res.estimates) {
    Json row{{"mean", e.mean}, {"second_moment", e.second_moment}, {"std_error", e.std_error}};
    if (f.n > 0) {
      row["mean_over_sqrt_n"] = e.mean / std::sqrt(n);
      row["second_over_n"] = e.second_moment / n;
    }
    est[to_string(stat)] = row;
  }
  j["estimates"] = est;
  j["total_steps"] = res.total_steps;
  j["elapsed_seconds"] = res.elapsed_seconds;
  return j;
}

// ------------------------------------------------------------- verify

int run_verify(const std::string& suite, const std::string& format, std::ostream& out) {
  const auto rows = run_suite(suite);
  bool all = true;
  for (const auto& r : rows) all = all && r.passed;
  if (format == "json") {
    Json j = header("verify");
    j["suite"] = suite;
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    j["checks"] = arr;
    j["passed"] = all;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.suite << "  " << r.name;
      if (!r.passed) out << "  -- " << r.detail;
      out << '\n';
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? 0 : 1;
}

void write_error(std::ostream& err, const std::string& code, const std::string& message,
                 const Json& extra = nullptr) {
  Json j{{"schema_version", kSchemaVersion}, {"error", Json{{"code", code}, {"message", message}}}};
  if (!extra.is_null()) j["error"]["diff"] = extra;
  err << j.dump() << '\n';
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::MethodDisagreement ? 1 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated extremes of simple random walks", "rwalk"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write results to FILE instead of stdout");

  const std::vector<std::string> stats{"max", "min", "joint", "maxabs", "strong", "weak"};
  const std::vector<std::string> methods{"matrix", "recurrence", "series", "band", "auto", "all"};
  const std::vector<std::string> ariths{"exact", "float", "auto"};

  PmfRequest pmf_req;
  auto* pmf = app.add_subcommand("pmf", "probability mass function of an extreme statistic");
  pmf->add_option("--stat", pmf_req.stat)->check(CLI::IsMember(stats))->required();
  pmf->add_option("--n", pmf_req.n)->required();
  pmf->add_option("--p", pmf_req.walk.p, "up-step probability NUM/DEN");
  pmf->add_option("--r", pmf_req.walk.r, "zero-step probability NUM/DEN");
  pmf->add_option("--method", pmf_req.method)->check(CLI::IsMember(methods));
  pmf->add_option("--arith", pmf_req.arith)->check(CLI::IsMember(ariths));
  pmf->add_option("--format", pmf_req.format)->check(CLI::IsMember({"json", "csv"}));

  PmfRequest mom_req;
  bool predict = false;
  auto* moments = app.add_subcommand("moments", "mean, second moment and variance");
  std::vector<std::string> mom_stats{"max", "min", "maxabs", "strong", "weak", "cross"};
  moments->add_option("--stat", mom_req.stat)->check(CLI::IsMember(mom_stats))->required();
  moments->add_option("--n", mom_req.n)->required();
  moments->add_option("--p", mom_req.walk.p);
  moments->add_option("--r", mom_req.walk.r);
  moments->add_option("--method", mom_req.method)->check(CLI::IsMember(methods));
  moments->add_option("--arith", mom_req.arith)->check(CLI::IsMember(ariths));
  moments->add_flag("--predict", predict, "add the asymptotic predictor");

  std::string cycle_p = "1/3";
  std::optional<std::uint64_t> copies;
  bool knuth = false;
  int kmax = 10;
  auto* cycle = app.add_subcommand("cycle", "excursion maximum before the first return to 0");
  cycle->add_option("--p", cycle_p);
  cycle->add_option("--copies", copies, "independent copies for the record mean");
  cycle->add_flag("--knuth", knuth, "compare with the log2 n asymptotic");
  cycle->add_option("--kmax", kmax, "rows of the distribution table")->check(CLI::Range(1, 200));

  double tol = 1e-12;
  auto* constants = app.add_subcommand("constants", "numerical constants");
  constants->add_option("--tol", tol)->check(CLI::Range(1e-14, 1.0));

  std::string scenario = "strong";
  double t = 0.001;
  bool second = false;
  auto* probe = app.add_subcommand("probe", "sech Riemann-sum probes");
  probe->add_option("--scenario", scenario)->check(CLI::IsMember({"strong", "weak"}));
  probe->add_option("--t", t)->required();
  probe->add_flag("--second-moment", second);

  SimFlags sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimates");
  simulate_cmd->add_option("--variant", sim.variant)
      ->check(CLI::IsMember({"plain", "strong", "weak", "lazy", "traffic", "persistent"}));
  simulate_cmd->add_option("--n", sim.n)->required();
  simulate_cmd->add_option("--trials", sim.trials);
  simulate_cmd->add_option("--seed", sim.seed);
  simulate_cmd->add_option("--alpha", sim.alpha);
  simulate_cmd->add_option("--p", sim.p);
  simulate_cmd->add_option("--r", sim.r);
  simulate_cmd->add_option("--reflect", sim.reflect)->check(CLI::IsMember({"strong", "weak"}));
  simulate_cmd->add_option("--workers", sim.workers);

  std::string suite = "all";
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(err, "InvalidArgument", e.what());
    return 2;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      write_error(err, "InvalidArgument", "cannot open " + out_path);
      return 2;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (pmf->parsed()) {
      const WalkParams params = make_params(pmf_req.walk, mode_for(pmf_req.stat));
      std::string used;
      const AnyPmf result = compute_pmf(pmf_req, params, used);
      emit_pmf(pmf_req, params, result, used, sink);
    } else if (moments->parsed()) {
      const WalkParams params = make_params(mom_req.walk, mode_for(mom_req.stat));
      sink << run_moments(mom_req, params, predict).dump(2) << '\n';
    } else if (cycle->parsed()) {
      sink << run_cycle(cycle_p, copies, knuth, kmax).dump(2) << '\n';
    } else if (constants->parsed()) {
      sink << run_constants(tol).dump(2) << '\n';
    } else if (probe->parsed()) {
      sink << run_probe(scenario, t, second).dump(2) << '\n';
    } else if (simulate_cmd->parsed()) {
      sink << run_simulate(sim).dump(2) << '\n';
    } else if (verify->parsed()) {
      return run_verify(suite, verify_format, sink);
    }
  } catch (const Disagreement& d) {
    write_error(err, "MethodDisagreement", d.message, d.diff);
    return 1;
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.code())), e.what());
    return exit_code_for(e.code());
  }
  return 0;
}

}  // namespace rwalk
