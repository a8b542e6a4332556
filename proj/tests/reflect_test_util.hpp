#pragma once

#include <functional>
#include <vector>

#include "rwalk/walk.hpp"

namespace rwalk::test_util {

// coefficient n of Σ λⁿ P{S_n = a, M_n = a} for the reflected walk, n = 0..max_n.
inline std::vector<Rational> diagonal_by_paths(int a, int max_n, const WalkParams& params, bool strong) {
  std::vector<Rational> out(max_n + 1, Rational(0));
  std::function<void(int, int, int, Rational)> go = [&](int t, int pos, int hi, Rational w) {
    if (w.is_zero()) return;
    if (pos == a && hi == a) out[t] += w;
    if (t == max_n) return;
    auto next = [&](int x) {
      const int y = strong ? (x < 0 ? -x : x) : (x < 0 ? 0 : x);
      return y;
    };
    const int up = next(pos + 1), down = next(pos - 1);
    go(t + 1, up, std::max(hi, up), w * params.p());
    go(t + 1, down, std::max(hi, down), w * params.q());
  };
  go(0, 0, 0, Rational(1));
  return out;
}

}  // namespace rwalk::test_util
