#pragma once

#include <array>
#include <cstdint>

namespace rwalk {

/// Philox4x32-10 (Salmon et al., SC'11): a counter-based generator. The same
/// (key, counter) always yields the same 128 output bits.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/// Random stream for one Monte Carlo trial: key = seed, counter = (trial,
/// block). Blocks are consumed in order, four 32-bit words at a time.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial);

  std::uint32_t next_u32();

 private:
  void refill();

  PhiloxKey key_;
  std::uint64_t trial_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int used_ = 4;
};

}  // namespace rwalk
