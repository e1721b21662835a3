#pragma once

// Reproducible random streams.
//
// Generator contract: every substream is a std::mt19937_64 seeded with
// substream_seed(seed, index), where substream_seed applies the SplitMix64
// finalizer to seed + (index + 1) * 0x9E3779B97F4A7C15. std::mt19937_64 output
// is fixed by the C++ standard, so results are identical on every platform
// and for every worker count. Do not change this without bumping the docs.

#include <cstdint>
#include <random>

namespace hhht {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

using Engine = std::mt19937_64;

inline Engine make_substream(std::uint64_t seed, std::uint64_t index) {
  return Engine(substream_seed(seed, index));
}

/// Fair bits, 64 per engine draw, least significant first.
class BitStream {
 public:
  explicit BitStream(Engine& engine) : engine_(engine) {}

  bool next() {
    if (left_ == 0) {
      word_ = engine_();
      left_ = 64;
    }
    const bool bit = word_ & 1U;
    word_ >>= 1;
    --left_;
    return bit;
  }

 private:
  Engine& engine_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace hhht
