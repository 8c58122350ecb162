#pragma once

#include <cstdint>

// Deterministic, platform-independent random number generation.
//
// The generator is xoshiro256** 1.0 (Blackman & Vigna), seeded by expanding a
// 64-bit seed through SplitMix64 (Steele, Lea & Vigna). Both algorithms have
// published reference implementations; test vectors live in tests/test_rng.cpp
// and in the README so other languages can reproduce the streams bit-for-bit.
// Bounded draws use rejection sampling (threshold = 2^64 mod n), so they are
// unbiased and reproducible. std::uniform_int_distribution is avoided on
// purpose: its output differs between standard library implementations.

namespace maxspace {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, n). n must be positive.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  // Integer in [lo, hi], both inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Sub-seed for task `index` of a run seeded with `seed`. Loops that may run
// concurrently (GRASP iterations, benchmark cells) give every task its own
// generator derived this way, so results do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 sm(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  sm.next();
  return sm.next();
}

}  // namespace maxspace
