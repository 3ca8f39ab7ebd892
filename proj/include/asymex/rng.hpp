// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace asymex {

/// SplitMix64: state += golden gamma, then two xor-shift-multiply rounds.
/// Every random choice in the library draws from this sequence, and bounded
/// draws use rejection sampling, so outputs do not depend on the standard
/// library's distribution implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() noexcept { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by SplitMix64.
template <class T>
void shuffle(std::span<T> items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Derived seed, a pure function of (master, a, b).
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) noexcept {
  SplitMix64 g(master ^ 0x5851f42d4c957f2dULL);
  std::uint64_t s = g.next();
  s ^= a * 0x9e3779b97f4a7c15ULL;
  SplitMix64 h(s);
  s = h.next() ^ (b * 0xc2b2ae3d27d4eb4fULL);
  SplitMix64 k(s);
  return k.next();
}

}  // namespace asymex
