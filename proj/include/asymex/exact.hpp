// SPDX-License-Identifier: Apache-2.0
#pragma once

// Bitmask enumeration over all subsets of a small vertex set. Vertex v is bit v.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "asymex/graph.hpp"
#include "asymex/vertex_set.hpp"

namespace asymex::exact {

using Mask = std::uint64_t;

/// Default exact-size cap, and the hard ceiling for any cap.
inline constexpr std::size_t kDefaultCap = 22;
inline constexpr std::size_t kMaxCap = 28;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Open neighbourhood masks. Requires g.size() <= 64.
std::vector<Mask> neighbor_masks(const Graph& g);

/// Lexicographic order of the sorted member lists.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask x = (a ^ b) & (~(a ^ b) + 1);
  const Mask above = ~((x << 1) - 1);
  if (a & x) return (b & above) != 0;
  return (a & above) == 0;
}

inline VertexSet to_set(std::size_t universe, Mask m) { return VertexSet::from_mask(universe, m); }

namespace detail {
template <class Visit>
bool dfs(std::span<const int> allowed, const Mask* nb, int max_size, Mask s, Mask cover, std::size_t next, int size,
         Visit& visit) {
  if constexpr (std::is_same_v<decltype(visit(s, cover, size)), bool>) {
    if (!visit(s, cover, size)) return false;
  } else {
    visit(s, cover, size);
  }
  if (size == max_size) return true;
  for (std::size_t i = next; i < allowed.size(); ++i) {
    const int v = allowed[i];
    if (!dfs(allowed, nb, max_size, s | bit(v), cover | nb[v], i + 1, size + 1, visit)) return false;
  }
  return true;
}
}  // namespace detail

/// Calls visit(S, cover, |S|) once for every S subset of `allowed` with
/// |S| <= max_size (including the empty set), where cover is the union of
/// nb[v] over v in S. Sets are visited in lexicographic order of their sorted
/// member lists. A visitor returning bool stops the walk by returning false.
template <class Visit>
void for_each_subset(std::span<const int> allowed, std::span<const Mask> nb, int max_size, Visit&& visit) {
  detail::dfs(allowed, nb.data(), max_size, Mask{0}, Mask{0}, 0, 0, visit);
}

/// 0, 1, ..., n-1.
std::vector<int> all_vertices(std::size_t n);

/// Bitmap over all 2^n subsets.
class SubsetBitmap {
 public:
  explicit SubsetBitmap(int n) : n_(n), words_(n >= 6 ? (std::size_t{1} << (n - 6)) : 1, 0) {}

  void set(Mask s) { words_[s >> 6] |= Mask{1} << (s & 63); }
  bool test(Mask s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }

  /// After this call test(S) is true iff some marked set contains S.
  void close_upward_supersets();

 private:
  int n_;
  std::vector<Mask> words_;
};

/// True iff no strict superset of s (within `universe`) is marked in a bitmap
/// already closed under supersets.
inline bool is_maximal(const SubsetBitmap& closed, Mask s, Mask universe) {
  Mask rest = universe & ~s;
  while (rest) {
    const Mask v = rest & (~rest + 1);
    if (closed.test(s | v)) return false;
    rest &= rest - 1;
  }
  return true;
}

}  // namespace asymex::exact
