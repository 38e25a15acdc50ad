#pragma once

#include <cstdint>

namespace throttle {

/// Counter-based generator ("splitmix64-ctr", version 1).
///
/// Output i of stream (seed, stream) is splitmix64_mix(key + (i + 1) * golden)
/// with key = splitmix64_mix(seed ^ splitmix64_mix(stream + golden)). The
/// sequence is fully specified, so draws are identical on every platform and
/// any trial can be replayed from (seed, stream) alone.
class CounterRng {
 public:
  static constexpr const char* kName = "splitmix64-ctr";
  static constexpr int kVersion = 1;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed ^ mix(stream + kGolden))) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    ++counter_;
    return mix(key_ + counter_ * kGolden);
  }

  /// Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace throttle
