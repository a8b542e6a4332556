#include "rwalk/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <tuple>
#include <vector>

#include "rwalk/error.hpp"

namespace rwalk {

namespace {

struct Path {
  int pos = 0;
  int max_plus = 0;
  int min_minus = 0;  // stored as a nonnegative depth
  int cycle_max = 0;
  bool returned = false;
};

// (stat_a, stat_b, ups, downs, zeros) -> number of step sequences
using Tally = std::map<std::tuple<int, int, int, int, int>, std::uint64_t>;

class Enumerator {
 public:
  Enumerator(int n, const WalkParams& params, WalkStatistic stat)
      : n_(n), params_(params), stat_(stat) {
    if (params.mode() == Mode::TrafficLight) {
      letters_ = {+1, 0};
    } else {
      if (!params.p().is_zero()) letters_.push_back(+1);
      if (!params.q().is_zero()) letters_.push_back(-1);
      if (!params.r().is_zero()) letters_.push_back(0);
    }
  }

  Tally run() {
    walk(0, Path{}, 0, 0, 0);
    return std::move(tally_);
  }

 private:
  int reflect(int s) const {
    switch (params_.mode()) {
      case Mode::StrongReflect: return std::abs(s);
      case Mode::WeakReflect:
      case Mode::TrafficLight: return std::max(s, 0);
      case Mode::Plain: return s;
    }
    return s;
  }

  void record(const Path& path, int ups, int downs, int zeros) {
    int a = 0, b = 0;
    switch (stat_) {
      case WalkStatistic::Max: a = path.max_plus; break;
      case WalkStatistic::AbsMin: a = path.min_minus; break;
      case WalkStatistic::JointMaxMin: a = path.max_plus; b = path.min_minus; break;
      case WalkStatistic::MaxAbs: a = std::max(path.max_plus, path.min_minus); break;
      case WalkStatistic::ReflectedMax: a = path.max_plus; break;
      case WalkStatistic::CycleMax:
        if (!path.returned) return;
        a = path.cycle_max;
        break;
    }
    tally_[{a, b, ups, downs, zeros}] += 1;
  }

  void step_to(int depth, Path path, int x, int ups, int downs, int zeros) {
    const int before = path.pos;
    path.pos = reflect(before + x);
    path.max_plus = std::max(path.max_plus, path.pos);
    path.min_minus = std::max(path.min_minus, -path.pos);
    if (stat_ == WalkStatistic::CycleMax && !path.returned) {
      path.cycle_max = std::max(path.cycle_max, std::abs(path.pos));
      if (path.pos == 0) path.returned = true;
    }
    walk(depth + 1, path, ups, downs, zeros);
  }

  void walk(int depth, const Path& path, int ups, int downs, int zeros) {
    if (depth == n_) {
      record(path, ups, downs, zeros);
      return;
    }
    if (params_.mode() == Mode::TrafficLight && (depth + 1) % 3 == 0) {
      step_to(depth, path, -1, ups, downs, zeros);
      return;
    }
    for (const int x : letters_) {
      step_to(depth, path, x, ups + (x > 0), downs + (x < 0), zeros + (x == 0));
    }
  }

  int n_;
  const WalkParams& params_;
  WalkStatistic stat_;
  std::vector<int> letters_;
  Tally tally_;
};

void check_statistic(const WalkParams& params, WalkStatistic stat) {
  const bool reflected = params.mode() != Mode::Plain;
  if (stat == WalkStatistic::ReflectedMax && !reflected) {
    throw Error(ErrorCode::InvalidParams, "ReflectedMax needs a reflected walk mode");
  }
  if (stat != WalkStatistic::ReflectedMax && reflected) {
    throw Error(ErrorCode::InvalidParams, "this statistic needs a plain walk");
  }
  if (stat == WalkStatistic::CycleMax && params.is_lazy()) {
    throw Error(ErrorCode::InvalidParams, "CycleMax is defined for r = 0");
  }
}

}  // namespace

OracleResult enumerate_exact(int n, const WalkParams& params, WalkStatistic stat) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative horizon");
  check_statistic(params, stat);
  const bool ternary = params.mode() != Mode::TrafficLight && params.is_lazy();
  const int cap = ternary ? kOracleMaxTernary : kOracleMaxBinary;
  if (n > cap) {
    throw Error(ErrorCode::TooLarge, "enumeration capped at n = " + std::to_string(cap));
  }

  const Tally tally = Enumerator(n, params, stat).run();

  // Weights: p^u q^d r^z, or (1/2)^(random steps) for the traffic light.
  auto weight = [&](int u, int d, int z) {
    if (params.mode() == Mode::TrafficLight) return Rational(1, 2).pow(u + z);
    return params.p().pow(u) * params.q().pow(d) * params.r().pow(z);
  };

  if (stat == WalkStatistic::JointMaxMin) {
    std::map<JointPmf::Key, Rational> entries;
    for (const auto& [key, count] : tally) {
      const auto& [a, b, u, d, z] = key;
      entries[{a, b}] += Rational(BigInt(std::to_string(count))) * weight(u, d, z);
    }
    return JointPmf(n, entries);
  }

  std::map<std::int64_t, Rational> masses;
  Rational total(0);
  for (const auto& [key, count] : tally) {
    const auto& [a, b, u, d, z] = key;
    const Rational w = Rational(BigInt(std::to_string(count))) * weight(u, d, z);
    masses[a] += w;
    total += w;
  }
  if (stat == WalkStatistic::CycleMax) {
    if (total.is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "no path returns to 0 within the horizon");
    }
    for (auto& [value, mass] : masses) mass /= total;
  }
  return Pmf::exact(masses);
}

Pmf enumerate_pmf(int n, const WalkParams& params, WalkStatistic stat) {
  if (stat == WalkStatistic::JointMaxMin) {
    throw Error(ErrorCode::InvalidArgument, "use enumerate_joint for the joint law");
  }
  return std::get<Pmf>(enumerate_exact(n, params, stat));
}

JointPmf enumerate_joint(int n, const WalkParams& params) {
  return std::get<JointPmf>(enumerate_exact(n, params, WalkStatistic::JointMaxMin));
}

}  // namespace rwalk
