#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace covergame {

/// splitmix64 step: hashes `x` to a well-distributed 64-bit value.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Seeded random stream with portable draw primitives. All randomness in the
/// library flows through this type so that results are reproducible across
/// platforms; the unit-interval and bounded-integer draws are derived from
/// raw 64-bit engine output rather than std distributions, whose exact output
/// is implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /// Stream for sub-task `index` of a computation seeded with `seed`.
  /// Distinct (seed, index) pairs give statistically independent streams.
  static RngStream derived(std::uint64_t seed, std::uint64_t index) {
    return RngStream(splitmix64(seed ^ splitmix64(index)));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). Unbiased via rejection.
  std::uint32_t next_below(std::uint32_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t threshold = (0 - b) % b;  // 2^64 mod bound
    std::uint64_t r = next_u64();
    while (r < threshold) r = next_u64();
    return static_cast<std::uint32_t>(r % b);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace covergame
