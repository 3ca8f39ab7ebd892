// SPDX-License-Identifier: Apache-2.0
#include "asymex/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "asymex/errors.hpp"

namespace asymex {

VertexSet VertexSet::from_list(std::size_t universe, std::span<const int> vertices) {
  VertexSet s(universe);
  for (int v : vertices) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw PreconditionError("VertexSet::from_mask: universe above 64");
  if (universe < 64 && (mask >> universe) != 0) throw PreconditionError("VertexSet::from_mask: mask outside universe");
  VertexSet s(universe);
  if (universe > 0) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside range [0, " + std::to_string(universe_) + ")");
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw PreconditionError("VertexSet::to_mask: universe above 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) throw PreconditionError("VertexSet: universe mismatch");
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace asymex
