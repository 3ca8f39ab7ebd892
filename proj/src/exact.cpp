// SPDX-License-Identifier: Apache-2.0
#include "asymex/exact.hpp"

#include "asymex/errors.hpp"

namespace asymex::exact {

std::vector<Mask> neighbor_masks(const Graph& g) {
  if (g.size() > 64) throw PreconditionError("bitmask enumeration needs at most 64 vertices");
  std::vector<Mask> nb(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int w : g.neighbors(static_cast<int>(v))) nb[v] |= bit(w);
  }
  return nb;
}

std::vector<int> all_vertices(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

void SubsetBitmap::close_upward_supersets() {
  static constexpr Mask kLow[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                   0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (int i = 0; i < n_ && i < 6; ++i) {
    const int shift = 1 << i;
    for (auto& w : words_) w |= (w >> shift) & kLow[i];
  }
  for (int i = 6; i < n_; ++i) {
    const std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (!(w & step)) words_[w] |= words_[w | step];
    }
  }
}

}  // namespace asymex::exact
