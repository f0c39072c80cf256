#pragma once

#include <cstdint>

namespace maxsemi {

// splitmix64: 64-bit state advanced by the golden-ratio increment, one
// multiply-xorshift finalizer per output. Small, fast, and splittable:
// scrambling (seed, index) pairs into fresh states yields decorrelated
// substreams, which is how all replicate-level sampling stays deterministic
// regardless of worker count.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0,1). 52-bit resolution with a half-step
  // offset so neither endpoint is ever produced (53-bit variants can round
  // up to exactly 1.0).
  double uniform01() {
    return (static_cast<double>((*this)() >> 12) + 0.5) * 0x1.0p-52;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream `index` of the family keyed by `seed`.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace maxsemi
