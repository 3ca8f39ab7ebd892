// SPDX-License-Identifier: Apache-2.0
#include "asymex/metric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "asymex/errors.hpp"

namespace asymex {

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<double> dist) : n_(n), dist_(std::move(dist)) {
  if (dist_.size() != n * n) throw PreconditionError("metric: distance matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i * n + i] != 0.0) throw PreconditionError("metric: nonzero diagonal at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const double d = dist_[i * n + j];
      if (std::isnan(d) || d < 0.0) throw PreconditionError("metric: negative or NaN distance");
      if (std::abs(d - dist_[j * n + i]) > kMetricTol && !(std::isinf(d) && std::isinf(dist_[j * n + i]))) {
        throw PreconditionError("metric: asymmetric distance");
      }
      if (i != j && d <= kMetricTol) throw PreconditionError("metric: distinct points at distance 0");
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = dist_[i * n + k];
      if (std::isinf(dik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (dist_[i * n + j] > dik + dist_[k * n + j] + kMetricTol) {
          throw PreconditionError("metric: triangle inequality fails at (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

FiniteMetricSpace FiniteMetricSpace::from_graph(const Graph& g) {
  const std::size_t n = g.size();
  const auto d = all_pairs_distances(g);
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    out[i] = d[i] == kUnreachable ? std::numeric_limits<double>::infinity() : static_cast<double>(d[i]);
  }
  return FiniteMetricSpace(n, std::move(out));
}

double FiniteMetricSpace::diameter() const {
  double best = 0.0;
  for (double d : dist_) {
    if (std::isfinite(d) && d > best) best = d;
  }
  return best;
}

FiniteMetricSpace FiniteMetricSpace::restrict_to(const VertexSet& keep) const {
  if (keep.universe() != n_) throw PreconditionError("metric restrict: universe mismatch");
  const auto pts = keep.to_vector();
  std::vector<double> out(pts.size() * pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) out[i * pts.size() + j] = distance(pts[i], pts[j]);
  }
  FiniteMetricSpace s;
  s.n_ = pts.size();
  s.dist_ = std::move(out);
  return s;
}

std::size_t space_size(const Space& s) {
  return std::visit([](const auto& x) { return x.size(); }, s);
}

double space_diameter(const Space& s) {
  if (const auto* g = std::get_if<Graph>(&s)) return static_cast<double>(diameter(*g));
  return std::get<FiniteMetricSpace>(s).diameter();
}

double space_distance(const Space& s, int x, int y) {
  if (const auto* g = std::get_if<Graph>(&s)) {
    const int d = bfs_distances(*g, x)[static_cast<std::size_t>(y)];
    return d == kUnreachable ? std::numeric_limits<double>::infinity() : static_cast<double>(d);
  }
  return std::get<FiniteMetricSpace>(s).distance(x, y);
}

int graph_radius(double R) {
  if (!(R > 0.0)) throw PreconditionError("radius must be positive");
  if (R > 1e9) return std::numeric_limits<int>::max() / 2;
  return static_cast<int>(std::floor(R + kMetricTol));
}

namespace {

Graph metric_adjacency(const FiniteMetricSpace& m, double R) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m.distance(static_cast<int>(i), static_cast<int>(j)) <= R + kMetricTol) {
        e.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph::from_edges(m.size(), e);
}

}  // namespace

Graph r_adjacency_graph(const Space& s, double R) {
  if (!(R > 0.0)) throw PreconditionError("radius must be positive");
  if (const auto* g = std::get_if<Graph>(&s)) {
    const int r = graph_radius(R);
    if (r < 1) return Graph::from_edges(g->size(), {});
    return graph_power(*g, r);
  }
  return metric_adjacency(std::get<FiniteMetricSpace>(s), R);
}

InducedSubgraph r_adjacency_subgraph(const Space& s, const VertexSet& keep, double R) {
  if (const auto* g = std::get_if<Graph>(&s)) {
    InducedSubgraph sub = induced_subgraph(*g, keep);
    const int r = graph_radius(R);
    sub.graph = r < 1 ? Graph::from_edges(sub.graph.size(), {}) : graph_power(sub.graph, r);
    return sub;
  }
  const auto& m = std::get<FiniteMetricSpace>(s);
  InducedSubgraph sub;
  sub.to_parent = keep.to_vector();
  sub.graph = metric_adjacency(m.restrict_to(keep), R);
  return sub;
}

VertexSet r_boundary(const Space& s, const VertexSet& A, double R) {
  const std::size_t n = space_size(s);
  if (A.universe() != n) throw PreconditionError("r_boundary: vertex set universe mismatch");
  if (!(R > 0.0)) throw PreconditionError("r_boundary: R must be positive");
  VertexSet out(n);
  if (const auto* g = std::get_if<Graph>(&s)) {
    const int r = graph_radius(R);
    if (r < 1) return out;
    const auto dist = multi_source_bfs(*g, A, r);
    for (std::size_t x = 0; x < n; ++x) {
      if (dist[x] != 0 && dist[x] <= r) out.insert(static_cast<int>(x));
    }
    return out;
  }
  const auto& m = std::get<FiniteMetricSpace>(s);
  const auto members = A.to_vector();
  for (std::size_t x = 0; x < n; ++x) {
    if (A.contains(static_cast<int>(x))) continue;
    for (int a : members) {
      if (m.distance(static_cast<int>(x), a) <= R + kMetricTol) {
        out.insert(static_cast<int>(x));
        break;
      }
    }
  }
  return out;
}

VertexSet relative_boundary(const Graph& g, const VertexSet& Y, const VertexSet& A, double R) {
  if (Y.universe() != g.size() || A.universe() != g.size()) {
    throw PreconditionError("relative_boundary: vertex set universe mismatch");
  }
  if (!A.is_subset_of(Y)) throw PreconditionError("relative_boundary: A is not contained in Y");
  const InducedSubgraph sub = induced_subgraph(g, Y);
  VertexSet local(sub.graph.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    if (A.contains(sub.to_parent[i])) local.insert(static_cast<int>(i));
  }
  const VertexSet lb = r_boundary(Space{sub.graph}, local, R);
  VertexSet out(g.size());
  lb.for_each([&](int i) { out.insert(sub.to_parent[static_cast<std::size_t>(i)]); });
  return out;
}

}  // namespace asymex
