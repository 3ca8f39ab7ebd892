// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asymex/graph.hpp"
#include "asymex/metric.hpp"

namespace asymex {

/// Ordered blocks X_1, X_2, ... with the coarse disjoint union metric:
/// within a block the block metric, across blocks d(x, y) = K_n + K_m with
/// K_n = n + sum_{i <= n} diam(X_i) (blocks numbered from 1).
class Family {
 public:
  Family() = default;

  const std::string& label() const noexcept { return label_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const Space& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<Space>& blocks() const noexcept { return blocks_; }
  std::size_t block_size(std::size_t i) const { return sizes_.at(i); }
  const std::vector<std::size_t>& block_sizes() const noexcept { return sizes_; }
  /// K_n for the 0-based block index i (that is, n = i + 1).
  double offset(std::size_t i) const { return offsets_.at(i); }
  /// Global id of the first point of block i.
  std::size_t start(std::size_t i) const { return starts_.at(i); }
  std::size_t total_size() const noexcept { return total_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  bool all_graphs() const;
  const Graph& graph(std::size_t i) const;

  /// (block index, local id) of a global point id.
  std::pair<std::size_t, int> locate(std::size_t global) const;
  double distance(std::size_t x, std::size_t y) const;

  friend Family coarse_disjoint_union(std::vector<Space> blocks, std::string label);

 private:
  std::string label_;
  std::vector<Space> blocks_;
  std::vector<std::size_t> sizes_;
  std::vector<double> offsets_;
  std::vector<std::size_t> starts_;
  std::size_t total_ = 0;
  std::vector<std::string> warnings_;
};

/// Throws PreconditionError on an empty block list or an empty block.
Family coarse_disjoint_union(std::vector<Space> blocks, std::string label = "");
Family graph_family(const std::vector<Graph>& graphs, std::string label = "");

struct EmbeddingDefect {
  std::size_t block = 0;
  double defect = 0.0;       ///< max_x |f^-1(B(f(x), R))| / |X_n|
  int worst_point = 0;       ///< an x attaining the maximum
  std::size_t worst_preimage = 0;
  int lipschitz = 0;         ///< max over edges of d_Y(f(x), f(x'))
};

/// Per-block defect of maps f_n : X_n -> Y_n (targets may hold a single graph
/// shared by every block). Distances in Y are path distances; R >= 0.
std::vector<EmbeddingDefect> weak_embedding_defect(const std::vector<Graph>& sources,
                                                   const std::vector<std::vector<int>>& maps,
                                                   const std::vector<Graph>& targets, int R);

}  // namespace asymex
