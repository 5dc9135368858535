#pragma once

#include <cstdint>

namespace ikm {

/// Counter-based generator: the value at (seed, stream, index) is a pure
/// function of its key, so growing the truncation size refines an ensemble
/// instead of reshuffling it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  /// Uniform double in [0, 1) for the 1-based index.
  double uniform(std::uint64_t index) const {
    return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
  }

  std::uint64_t bits(std::uint64_t index) const {
    std::uint64_t x = seed_;
    x = mix(x ^ (stream_ * 0x9e3779b97f4a7c15ULL));
    x = mix(x ^ (index * 0xbf58476d1ce4e5b9ULL));
    return mix(x);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace ikm
