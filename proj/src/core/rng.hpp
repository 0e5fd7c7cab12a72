#pragma once

#include <cstdint>
#include <random>

namespace mcis {

// Seedable generator with a documented identity: std::mt19937_64 for the raw
// stream, with the real/integer mappings below done here rather than through
// <random> distributions (whose output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., bound - 1}; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  // Independent stream seed for (seed, stream); splitmix64 finalizer.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

// Stream identifiers so that node placement, destination choice, etc. do not
// share draws.
namespace stream {
inline constexpr std::uint64_t placement = 1;
inline constexpr std::uint64_t destinations = 2;
inline constexpr std::uint64_t arrivals = 3;
}  // namespace stream

}  // namespace mcis
