#pragma once

#include <cstdint>

namespace lien2 {

/// Deterministic, platform-independent generator (splitmix64). All sampling in the
/// library goes through this so a fixed seed reproduces byte-identical reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Generator for sample `index` of a sweep: results are independent of
  /// evaluation order, so sweeps can be parallelized or resumed.
  static Rng derived(std::uint64_t seed, std::uint64_t index) {
    Rng g(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
    g.next_u64();
    return g;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lien2
