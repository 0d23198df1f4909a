#ifndef CORIOLIS_RNG_HPP
#define CORIOLIS_RNG_HPP

#include <cstdint>

namespace coriolis {

/// Small counter-seeded generator (splitmix64 core). Every shot derives
/// its own stream from (seed, point index, shot index), so results do not
/// depend on execution order or thread count, and are identical across
/// platforms (no standard-library distributions involved).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  static RandomStream for_shot(std::uint64_t seed, std::uint64_t point_index,
                               std::uint64_t shot_index) {
    std::uint64_t h = mix(seed ^ 0x9e3779b97f4a7c15ULL);
    h = mix(h ^ (point_index * 0xbf58476d1ce4e5b9ULL));
    h = mix(h ^ (shot_index * 0x94d049bb133111ebULL));
    return RandomStream(h);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal();

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace coriolis

#endif  // CORIOLIS_RNG_HPP
