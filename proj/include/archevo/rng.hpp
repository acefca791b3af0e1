#pragma once

#include <cstdint>

namespace archevo {

/// Purpose tags for derived random streams. Every consumer of randomness
/// derives its own child stream from these, so draw sequences never depend
/// on scheduling or worker count.
namespace rng_tag {
inline constexpr std::uint64_t kIsland = 1;       ///< (island index)
inline constexpr std::uint64_t kInit = 2;         ///< population init, (restart counter)
inline constexpr std::uint64_t kSlot = 3;         ///< (generation, slot index)
inline constexpr std::uint64_t kEpidemic = 4;     ///< (generation)
inline constexpr std::uint64_t kMigration = 5;    ///< (generation)
}  // namespace rng_tag

/// Counter-based pseudo-random source (SplitMix64 core).
///
/// A source is identified by a (seed, stream) pair. `derived()` produces a
/// statistically independent child stream from the parent's identity alone,
/// never from how many draws the parent has made. This makes the whole draw
/// tree a pure function of the root seed and the derivation path, which is
/// what guarantees bitwise reproducibility under any parallel schedule.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), state_(mix(seed ^ mix(stream))) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Child source keyed by (tag, a, b). Depends only on this source's
  /// identity, so it may be called at any time, in any order.
  RandomSource derived(std::uint64_t tag, std::uint64_t a = 0,
                       std::uint64_t b = 0) const {
    std::uint64_t s = stream_;
    s = mix(s ^ mix(tag));
    s = mix(s ^ mix(a));
    s = mix(s ^ mix(b));
    return RandomSource(seed_, s);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + next_double() * (hi - lo); }

  /// Uniform integer in [0, n). Uses the multiply-shift reduction, which is
  /// bias-negligible for the population-scale ranges used here and avoids
  /// platform-dependent rejection loops.
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

}  // namespace archevo
