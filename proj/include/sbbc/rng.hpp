#pragma once

#include <cmath>
#include <cstdint>

namespace sbbc {

// SplitMix64 finalizer (Steele, Lea & Flood). Used as a counter-based
// generator: output i of a stream is mix64(stream_base + (i+1)*GOLDEN).
// Pure integer arithmetic, so streams are bit-identical on every platform,
// and any draw is addressable by (seed, stream, counter) alone.
inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

class CounterRng {
 public:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  explicit CounterRng(uint64_t seed, uint64_t stream = 0)
      : base_(mix64(seed ^ (0xa5a5a5a5deadbeefULL * (stream + 1)))), counter_(0) {}

  uint64_t next_u64() { return mix64(base_ + (++counter_) * kGolden); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return std::ldexp(static_cast<double>(next_u64() >> 11), -53); }

  // Uniform in [0, bound); bound > 0. Fixed-point multiply keeps it exact
  // integer arithmetic (bias ~2^-64, irrelevant next to reproducibility).
  uint64_t next_below(uint64_t bound) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  bool next_bernoulli(double p) { return next_unit() < p; }

 private:
  uint64_t base_;
  uint64_t counter_;
};

}  // namespace sbbc
