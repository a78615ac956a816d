#pragma once

#include <cstdint>

namespace gel {

// splitmix64: tiny 64-bit generator with a splittable seed scheme. All
// randomized operations in the library draw from this so that a (seed, stream)
// pair reproduces bit-identical results on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) via the fixed-point multiply trick; exact
  // enough for shuffles at desk scale and fully deterministic.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool next_bit() { return (next() >> 63) != 0; }

  // Derives an independent stream seed, e.g. one per trial or per vertex.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace gel
