#pragma once

#include <cstdint>

namespace twistrace {

// splitmix64. Used instead of <random> distributions so that a seed draws the
// same numbers with every standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [-1, 1).
  double uniform_signed() { return static_cast<double>(next() >> 11) * 0x1.0p-53 * 2.0 - 1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace twistrace
