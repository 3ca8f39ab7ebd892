// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "asymex/graph.hpp"
#include "asymex/vertex_set.hpp"

namespace asymex {

/// Comparison tolerance for real-valued distances.
inline constexpr double kMetricTol = 1e-9;

/// Finite metric space given by a dense distance matrix. Infinite distances
/// are allowed (disconnected pieces).
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  /// Validates symmetry, zero diagonal, positivity off the diagonal and the triangle inequality.
  FiniteMetricSpace(std::size_t n, std::vector<double> dist);

  /// Shortest-path metric of a graph.
  static FiniteMetricSpace from_graph(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  double distance(int x, int y) const { return dist_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)]; }
  /// Largest finite distance.
  double diameter() const;

  /// Subspace with the restricted metric; points renumbered in increasing order.
  FiniteMetricSpace restrict_to(const VertexSet& keep) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> dist_;
};

using Space = std::variant<Graph, FiniteMetricSpace>;

std::size_t space_size(const Space& s);
double space_diameter(const Space& s);
double space_distance(const Space& s, int x, int y);

/// Graph on the points of `s` with x ~ y iff 0 < d(x, y) <= R. For graphs and
/// integer R this is the R-th power. The R-boundary of A in `s` is exactly the
/// vertex boundary of A in this graph.
Graph r_adjacency_graph(const Space& s, double R);

/// Same, for the subspace on `keep`. Graph blocks use distances inside the
/// induced subgraph; metric blocks use the restricted metric.
InducedSubgraph r_adjacency_subgraph(const Space& s, const VertexSet& keep, double R);

/// { x not in A : d(x, A) <= R }.
VertexSet r_boundary(const Space& s, const VertexSet& A, double R);

/// R-boundary of A inside the full subgraph on Y. Requires A subset of Y.
VertexSet relative_boundary(const Graph& g, const VertexSet& Y, const VertexSet& A, double R);

/// Integer radius used for graphs: floor(R) with tolerance.
int graph_radius(double R);

}  // namespace asymex
