#pragma once

#include <cstdint>

namespace polyinv {

/// SplitMix64 (Steele, Lea, Flood). Small, fast, and splittable: split()
/// derives an independent child stream, which keeps samplers prefix-stable
/// (element i depends only on the seed and i).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64(next() ^ 0x6A09E667F3BCC909ull); }

  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace polyinv
