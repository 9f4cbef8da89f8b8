#pragma once

#include <cstdint>

namespace folwb {

// SplitMix64 (Steele/Lea/Flood constants). Pinned so that seeded corpora are
// bit-identical across platforms and toolchains; std:: distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Plain modulo; the bias is irrelevant here and the
  // result is reproducible, which is what matters.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  bool flip() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace folwb
