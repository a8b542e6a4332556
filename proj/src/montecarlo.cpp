#include "rwalk/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "rwalk/error.hpp"
#include "rwalk/philox.hpp"

namespace rwalk {

namespace {

constexpr std::uint64_t kTrialBlock = 1024;
constexpr int kStatCount = 5;

int slot(SimStatistic s) { return static_cast<int>(s); }

std::uint64_t threshold32(const Rational& prob) {
  // floor(prob · 2^32)
  const BigInt scaled = (prob.numerator() << 32) / prob.denominator();
  return scaled.get_ui();
}

bool is_reflecting(const WalkParams& params) {
  return params.mode() == Mode::StrongReflect || params.mode() == Mode::WeakReflect;
}

// Steps of a Bernoulli walk: fair walks take one bit per step, everything
// else compares a 32-bit uniform against integer thresholds.
class BernoulliSteps {
 public:
  BernoulliSteps(const WalkParams& params, TrialStream& stream)
      : stream_(stream),
        fair_(params.p() == Rational(1, 2) && params.q() == Rational(1, 2)),
        up_(threshold32(params.p())),
        down_(up_ + threshold32(params.q())) {}

  int next() {
    if (fair_) {
      if (left_ == 0) {
        bits_ = stream_.next_u32();
        left_ = 32;
      }
      const int bit = static_cast<int>(bits_ & 1u);
      bits_ >>= 1;
      --left_;
      return bit ? 1 : -1;
    }
    const std::uint64_t u = stream_.next_u32();
    if (u < up_) return 1;
    if (u < down_) return -1;
    return 0;
  }

 private:
  TrialStream& stream_;
  bool fair_;
  std::uint64_t up_;
  std::uint64_t down_;
  std::uint32_t bits_ = 0;
  int left_ = 0;
};

class FairBits {
 public:
  explicit FairBits(TrialStream& stream) : stream_(stream) {}
  bool next() {
    if (left_ == 0) {
      bits_ = stream_.next_u32();
      left_ = 32;
    }
    const bool bit = bits_ & 1u;
    bits_ >>= 1;
    --left_;
    return bit;
  }

 private:
  TrialStream& stream_;
  std::uint32_t bits_ = 0;
  int left_ = 0;
};

struct TrialValues {
  std::int64_t v[kStatCount];
};

// Tracks the running extremes of one path.
struct PathExtremes {
  std::int64_t pos = 0, hi = 0, lo = 0;
  void step(int x) {
    pos += x;
    hi = std::max(hi, pos);
    lo = std::min(lo, pos);
  }
  TrialValues values() const {
    TrialValues t{};
    t.v[slot(SimStatistic::MaxPlus)] = hi;
    t.v[slot(SimStatistic::MinMinus)] = -lo;
    t.v[slot(SimStatistic::MaxAbs)] = std::max(hi, -lo);
    t.v[slot(SimStatistic::CrossProduct)] = hi * -lo;
    return t;
  }
};

std::int64_t reflect(std::int64_t next, Mode mode) {
  if (mode == Mode::StrongReflect) return next < 0 ? -next : next;
  return next < 0 ? 0 : next;
}

class TrialRunner {
 public:
  explicit TrialRunner(const SimConfig& config)
      : config_(config),
        repeat_(static_cast<std::uint64_t>(std::ldexp(config.persistent.alpha, 32))) {}

  TrialValues run(std::uint64_t trial) const {
    TrialStream stream(config_.seed, trial);
    switch (config_.process) {
      case Process::Bernoulli:
        return bernoulli(stream);
      case Process::TrafficLight:
        return traffic_light(stream);
      case Process::Persistent:
        return persistent(stream);
    }
    return {};
  }

 private:
  TrialValues bernoulli(TrialStream& stream) const {
    BernoulliSteps steps(config_.params, stream);
    const Mode mode = config_.params.mode();
    if (is_reflecting(config_.params)) {
      std::int64_t pos = 0, hi = 0;
      for (int j = 0; j < config_.n; ++j) {
        pos = reflect(pos + steps.next(), mode);
        hi = std::max(hi, pos);
      }
      TrialValues t{};
      t.v[slot(SimStatistic::ReflectedMax)] = hi;
      return t;
    }
    PathExtremes path;
    for (int j = 0; j < config_.n; ++j) path.step(steps.next());
    return path.values();
  }

  // Weakly reflected; −1 at times divisible by 3, fair {+1, 0} otherwise.
  TrialValues traffic_light(TrialStream& stream) const {
    FairBits bits(stream);
    std::int64_t pos = 0, hi = 0;
    for (int j = 1; j <= config_.n; ++j) {
      const int x = j % 3 == 0 ? -1 : (bits.next() ? 1 : 0);
      pos = reflect(pos + x, Mode::WeakReflect);
      hi = std::max(hi, pos);
    }
    TrialValues t{};
    t.v[slot(SimStatistic::ReflectedMax)] = hi;
    return t;
  }

  TrialValues persistent(TrialStream& stream) const {
    PathExtremes path;
    if (config_.n == 0) return path.values();
    int dir = FairBits(stream).next() ? 1 : -1;
    path.step(dir);
    for (int j = 1; j < config_.n; ++j) {
      if (stream.next_u32() >= repeat_) dir = -dir;
      path.step(dir);
    }
    return path.values();
  }

  const SimConfig& config_;
  std::uint64_t repeat_;
};

// Exact per-block sums of the value and its square for every statistic.
struct BlockSums {
  __int128 sum[kStatCount] = {};
  __int128 sq[kStatCount] = {};
};

BlockSums run_block(const TrialRunner& runner, std::uint64_t block, std::uint64_t trials) {
  BlockSums out;
  const std::uint64_t first = block * kTrialBlock;
  const std::uint64_t last = std::min(trials, first + kTrialBlock);
  for (std::uint64_t t = first; t < last; ++t) {
    const TrialValues v = runner.run(t);
    for (int s = 0; s < kStatCount; ++s) {
      out.sum[s] += v.v[s];
      out.sq[s] += static_cast<__int128>(v.v[s]) * v.v[s];
    }
  }
  return out;
}

BigInt to_big(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

double ratio(const BigInt& num, const BigInt& den) { return Rational(num, den).to_double(); }

SimResult run(const SimConfig& config, bool parallel) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const TrialRunner runner(config);
  const std::uint64_t blocks = (config.trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<BlockSums> partial(blocks);
  if (parallel) {
    const int workers = config.workers > 0 ? config.workers : omp_get_max_threads();
    const auto count = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t b = 0; b < count; ++b) {
      partial[b] = run_block(runner, static_cast<std::uint64_t>(b), config.trials);
    }
  } else {
    for (std::uint64_t b = 0; b < blocks; ++b) partial[b] = run_block(runner, b, config.trials);
  }
  BlockSums total;
  for (const auto& part : partial) {
    for (int s = 0; s < kStatCount; ++s) {
      total.sum[s] += part.sum[s];
      total.sq[s] += part.sq[s];
    }
  }

  SimResult result;
  result.config = config;
  const BigInt trials(static_cast<unsigned long>(config.trials));
  for (const auto stat : config.statistics) {
    const BigInt sum = to_big(total.sum[slot(stat)]);
    const BigInt sq = to_big(total.sq[slot(stat)]);
    Estimate e;
    e.mean = ratio(sum, trials);
    e.second_moment = ratio(sq, trials);
    if (config.trials > 1) {
      // Unbiased variance (T·Σv² − (Σv)²) / (T(T−1)), then / T for the mean.
      const BigInt num = trials * sq - sum * sum;
      const BigInt den = trials * trials * (trials - 1);
      e.std_error = std::sqrt(std::max(0.0, ratio(num, den)));
    }
    result.estimates[stat] = e;
  }
  result.total_steps = static_cast<std::uint64_t>(config.n) * config.trials;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

std::string to_string(SimStatistic stat) {
  switch (stat) {
    case SimStatistic::MaxPlus:
      return "max_plus";
    case SimStatistic::MinMinus:
      return "min_minus";
    case SimStatistic::ReflectedMax:
      return "reflected_max";
    case SimStatistic::MaxAbs:
      return "max_abs";
    case SimStatistic::CrossProduct:
      return "cross_product";
  }
  return "unknown";
}

bool SimResult::same_estimates(const SimResult& other) const {
  return estimates == other.estimates && total_steps == other.total_steps;
}

void validate(const SimConfig& config) {
  if (config.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (config.n < 0) throw Error(ErrorCode::InvalidArgument, "horizon must be >= 0");
  if (config.workers < 0) throw Error(ErrorCode::InvalidArgument, "workers must be >= 0");
  if (config.statistics.empty()) throw Error(ErrorCode::InvalidArgument, "no statistics requested");
  const bool reflected = config.process == Process::TrafficLight ||
                         (config.process == Process::Bernoulli && is_reflecting(config.params));
  if (config.process == Process::Bernoulli && config.params.mode() == Mode::TrafficLight) {
    throw Error(ErrorCode::InvalidParams, "use the traffic-light process");
  }
  if (config.process == Process::TrafficLight && config.n % 3 != 0) {
    throw Error(ErrorCode::InvalidArgument, "traffic light needs n divisible by 3");
  }
  if (config.process == Process::Persistent &&
      !(config.persistent.alpha >= 0 && config.persistent.alpha <= 1)) {
    throw Error(ErrorCode::InvalidParams, "alpha must lie in [0, 1]");
  }
  for (const auto stat : config.statistics) {
    if ((stat == SimStatistic::ReflectedMax) != reflected) {
      throw Error(ErrorCode::InvalidArgument,
                  to_string(stat) + (reflected ? " needs an unreflected walk" : " needs a reflected walk"));
    }
  }
}

SimResult simulate(const SimConfig& config) { return run(config, true); }

SimResult simulate_serial(const SimConfig& config) { return run(config, false); }

CoupledMaxima coupled_reflection_trial(const WalkParams& params, int n, std::uint64_t seed,
                                       std::uint64_t trial) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "horizon must be >= 0");
  TrialStream stream(seed, trial);
  BernoulliSteps steps(params, stream);
  std::int64_t strong = 0, weak = 0;
  CoupledMaxima out{0, 0};
  for (int j = 0; j < n; ++j) {
    const int x = steps.next();
    strong = reflect(strong + x, Mode::StrongReflect);
    weak = reflect(weak + x, Mode::WeakReflect);
    out.strong_max = std::max<int>(out.strong_max, static_cast<int>(strong));
    out.weak_max = std::max<int>(out.weak_max, static_cast<int>(weak));
  }
  return out;
}

}  // namespace rwalk
