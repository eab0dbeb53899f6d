#ifndef GREENCELL_RANDOM_HPP
#define GREENCELL_RANDOM_HPP

#include <cmath>
#include <cstdint>

namespace greencell {

// Deterministic SplitMix64 stream. Substreams are derived by hashing
// (seed, index), so trial i sees the same draws no matter how trials are
// partitioned across workers. All variates use inverse-transform or
// Box-Muller with a fixed number of uniforms per call; the draw count per
// variate never depends on the values drawn.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(mix(seed + kGolden)) {}

  static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    RandomStream s(0);
    s.state_ = mix(mix(seed ^ 0x243f6a8885a308d3ull) + index * kGolden);
    return s;
  }

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Exponential with the given mean (inverse CDF of one uniform).
  double next_exponential(double mean) {
    return -mean * std::log1p(-next_uniform());
  }

  // Standard normal via Box-Muller; always consumes exactly two uniforms.
  double next_gaussian() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace greencell

#endif  // GREENCELL_RANDOM_HPP
