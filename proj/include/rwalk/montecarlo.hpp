#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "rwalk/kernels.hpp"
#include "rwalk/walk.hpp"

namespace rwalk {

enum class Process { Bernoulli, TrafficLight, Persistent };

enum class SimStatistic { MaxPlus, MinMinus, ReflectedMax, MaxAbs, CrossProduct };

std::string to_string(SimStatistic stat);

/// Persistent walk: the step repeats the previous direction with probability
/// alpha. The first step is +1 or −1 with probability 1/2 each.
struct PersistentParams {
  double alpha = 0.5;
};

struct SimConfig {
  Process process = Process::Bernoulli;
  /// Bernoulli step law; its mode selects reflection (Plain, StrongReflect,
  /// WeakReflect). Ignored by the other processes.
  WalkParams params = WalkParams::symmetric();
  PersistentParams persistent;
  int n = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::set<SimStatistic> statistics;
  /// OpenMP worker count; 0 uses the runtime default. Never affects results.
  int workers = 0;
};

struct Estimate {
  double mean = 0;
  double second_moment = 0;
  double std_error = 0;

  friend bool operator==(const Estimate&, const Estimate&) = default;
};

struct SimResult {
  SimConfig config;
  std::map<SimStatistic, Estimate> estimates;
  std::uint64_t total_steps = 0;
  double elapsed_seconds = 0;

  /// Equality of everything except wall time.
  bool same_estimates(const SimResult& other) const;
};

/// Validates the config: trials >= 1, n >= 0, traffic light needs n % 3 == 0,
/// ReflectedMax needs a reflected process (the traffic light is weakly
/// reflected), the others a non-reflected one,
/// persistent alpha in [0, 1].
void validate(const SimConfig& config);

/// Trial t draws from TrialStream(seed, t). Per-trial statistics are integers
/// and are accumulated exactly, so the result does not depend on the worker
/// count or the schedule.
SimResult simulate(const SimConfig& config);
/// Single-threaded reference for simulate().
SimResult simulate_serial(const SimConfig& config);

/// Strong and weak reflection driven by the same steps of one trial.
struct CoupledMaxima {
  int strong_max;
  int weak_max;
};
CoupledMaxima coupled_reflection_trial(const WalkParams& params, int n,
                                       std::uint64_t seed, std::uint64_t trial);

}  // namespace rwalk
