#pragma once

#include <cstdint>

namespace bayesbound {

// Counter-based generator: SplitMix64 finalizer applied to (key, counter)
// pairs. Every draw is output[i] = mix(key + i * GOLDEN); substreams rekey
// deterministically, so results are bit-exact for a given seed and
// independent of threading or call interleaving across streams.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(seed) {}

  // Derive an independent substream (e.g. one per Monte Carlo sample).
  CounterRng substream(std::uint64_t index) const {
    return CounterRng(mix(key_ ^ mix(index + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (two counter draws per call; no cache,
  // so the stream position is a pure function of the call count).
  double normal();

  // Exponential(1); used for Dirichlet-style simplex sampling.
  double exponential();

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bayesbound
