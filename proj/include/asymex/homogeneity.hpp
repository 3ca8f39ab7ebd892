// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asymex/expansion.hpp"
#include "asymex/graph.hpp"
#include "asymex/ratio.hpp"
#include "asymex/vertex_set.hpp"

namespace asymex {

enum class DichotomyBranch { large_witness, unique_maximal, violated };
std::string to_string(DichotomyBranch b);

struct DichotomyReport {
  Ratio h;
  std::vector<VertexSet> maximal;  ///< inclusion-maximal Cheeger sets, lexicographic
  std::size_t minimiser_count = 0;
  DichotomyBranch branch = DichotomyBranch::violated;
  /// large_witness: the largest maximal Cheeger set; unique_maximal: the unique one.
  VertexSet witness;
};

/// All Cheeger sets (0 < |A| <= n/2 attaining h) of a connected graph, their
/// maximal elements, and which alternative holds: a Cheeger set with |A| > n/4,
/// or a unique maximal Cheeger set.
DichotomyReport cheeger_dichotomy(const Graph& g, std::size_t cap = exact::kDefaultCap);

struct BoundaryCounts {
  std::size_t union_boundary = 0;         ///< |d(A u B)|
  std::size_t intersection_boundary = 0;  ///< |d(A n B)|
  std::size_t dA = 0, dB = 0, dA_dB = 0, A_dB = 0, dA_B = 0;

  /// |d(A u B)| = |dA| + |dB| - |dA n dB| - |A n dB| - |dA n B|.
  bool union_identity() const noexcept { return union_boundary + dA_dB + A_dB + dA_B == dA + dB; }
  /// |d(A n B)| <= |A n dB| + |dA n B| + |dA n dB|. Equality fails in general.
  bool intersection_bound() const noexcept { return intersection_boundary <= A_dB + dA_B + dA_dB; }
  bool intersection_equality() const noexcept { return intersection_boundary == A_dB + dA_B + dA_dB; }
  /// |d(A u B)| + |d(A n B)| <= |dA| + |dB|.
  bool submodular() const noexcept { return union_boundary + intersection_boundary <= dA + dB; }
};

BoundaryCounts boundary_counts(const Graph& g, const VertexSet& A, const VertexSet& B);

/// Permutation p of the vertices (v -> p[v]) that preserves adjacency.
bool is_automorphism(const Graph& g, const std::vector<int>& p);

enum class TransitiveStatus { consistent, hypothesis_violated, inconclusive, inconsistent };
std::string to_string(TransitiveStatus s);

struct TransitiveBlock {
  bool established = false;       ///< flag decided (by enumeration or by a hint)
  bool multiple_maximal = false;
  std::string source;              ///< "enumeration", "automorphism hint" or "none"
  std::optional<Ratio> h;          ///< exact Cheeger constant when known
  std::optional<Ratio> profile_quarter;
};

struct TransitiveReport {
  std::vector<TransitiveBlock> blocks;
  std::optional<Ratio> c_quarter;  ///< min_n profile_n(1/4)
  TransitiveStatus status = TransitiveStatus::inconclusive;
  std::string verdict;
};

/// Checks, over the given range, that "more than one maximal Cheeger set in
/// every block" together with c(1/4) > 0 forces h(X_n) >= c(1/4). hints[n]
/// lists candidate automorphisms of block n (may be empty); hints generating a
/// transitive group establish the flag without enumeration.
TransitiveReport transitive_equivalence_check(const std::vector<Graph>& family,
                                              const std::vector<std::vector<std::vector<int>>>& hints = {},
                                              std::size_t cap = exact::kDefaultCap);

}  // namespace asymex
