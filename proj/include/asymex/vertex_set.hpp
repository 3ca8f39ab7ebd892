// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace asymex {

/// Dynamic bitset over the vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet from_list(std::size_t universe, std::span<const int> vertices);
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool contains(int v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v);
  void erase(int v);

  /// Sorted member list.
  std::vector<int> to_vector() const;
  /// Requires universe <= 64.
  std::uint64_t to_mask() const;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Order of sorted vertex lists, compared lexicographically (a proper prefix is smaller).
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace asymex
