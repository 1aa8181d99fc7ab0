#ifndef EPSC_RNG_HPP
#define EPSC_RNG_HPP

#include <cstdint>

namespace epsc {

// SplitMix64: tiny, deterministic across platforms.  Used for all seeded
// generation so that reports are reproducible from (seed, trial index).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

  // Sub-generator for an independent trial.
  static Rng forTrial(std::uint64_t seed, std::uint64_t trial) {
    Rng mix(seed ^ (0x51ed2701a3c5e0f7ull * (trial + 1)));
    mix.next();
    return mix;
  }

 private:
  std::uint64_t s_;
};

}  // namespace epsc

#endif
