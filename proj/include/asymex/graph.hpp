// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "asymex/vertex_set.hpp"

namespace asymex {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

using Edge = std::pair<int, int>;

/// Finite simple undirected graph with vertex ids 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates: endpoints in range, no loops, no duplicate edges (in either orientation).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const noexcept { return max_degree_; }
  bool connected() const noexcept { return connected_; }
  bool has_edge(int u, int v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
  int max_degree_ = 0;
  bool connected_ = true;
};

Graph complete_graph(std::size_t m);
Graph cycle_graph(std::size_t m);
Graph path_graph(std::size_t m);
/// Star K_{1,leaves}; the center is vertex 0.
Graph star_graph(std::size_t leaves);
Graph hypercube_graph(std::size_t dim);

/// Graph on the vertices of `parts` laid out consecutively plus the extra edges (global ids).
Graph disjoint_union(std::span<const Graph> parts, std::span<const Edge> extra_edges = {});

std::vector<int> bfs_distances(const Graph& g, int source);
/// Distances to the nearest source, truncated: entries beyond `limit` stay kUnreachable.
std::vector<int> multi_source_bfs(const Graph& g, const VertexSet& sources, int limit = kUnreachable);
/// Row-major n x n matrix of distances.
std::vector<int> all_pairs_distances(const Graph& g);
/// Largest finite distance (0 for the empty or single-vertex graph).
int diameter(const Graph& g);
/// Component id per vertex, ids assigned in order of lowest vertex.
std::vector<int> components(const Graph& g);
std::size_t component_count(const Graph& g);

/// Shortest cycle length, nullopt for forests.
std::optional<int> girth(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  ///< local id -> parent id, increasing
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Graph on the same vertices with x ~ y iff 0 < d(x, y) <= radius.
Graph graph_power(const Graph& g, int radius);

/// New vertex i is old vertex new_to_old[i].
Graph relabel(const Graph& g, std::span<const int> new_to_old);

}  // namespace asymex
