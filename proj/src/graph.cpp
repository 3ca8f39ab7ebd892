// SPDX-License-Identifier: Apache-2.0
#include "asymex/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "asymex/errors.hpp"

namespace asymex {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside vertex range");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& row = g.adj_[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw PreconditionError("duplicate edge at vertex " + std::to_string(v));
    }
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(row.size()));
  }
  g.edge_count_ = edges.size();
  g.connected_ = n <= 1 || component_count(g) == 1;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (int v : adj_[u]) {
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    }
  }
  return out;
}

Graph complete_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) e.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(m, e);
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < m; ++u) e.emplace_back(static_cast<int>(u), static_cast<int>(u + 1));
  e.emplace_back(0, static_cast<int>(m - 1));
  return Graph::from_edges(m, e);
}

Graph path_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < m; ++u) e.emplace_back(static_cast<int>(u), static_cast<int>(u + 1));
  return Graph::from_edges(m, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v <= leaves; ++v) e.emplace_back(0, static_cast<int>(v));
  return Graph::from_edges(leaves + 1, e);
}

Graph hypercube_graph(std::size_t dim) {
  if (dim > 20) throw PreconditionError("hypercube dimension above 20");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) e.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return Graph::from_edges(n, e);
}

Graph disjoint_union(std::span<const Graph> parts, std::span<const Edge> extra_edges) {
  std::vector<Edge> e;
  int offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) e.emplace_back(u + offset, v + offset);
    offset += static_cast<int>(p.size());
  }
  e.insert(e.end(), extra_edges.begin(), extra_edges.end());
  return Graph::from_edges(static_cast<std::size_t>(offset), e);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  VertexSet s(g.size());
  s.insert(source);
  return multi_source_bfs(g, s);
}

std::vector<int> multi_source_bfs(const Graph& g, const VertexSet& sources, int limit) {
  std::vector<int> dist(g.size(), kUnreachable);
  std::vector<int> queue;
  queue.reserve(g.size());
  sources.for_each([&](int v) {
    dist[static_cast<std::size_t>(v)] = 0;
    queue.push_back(v);
  });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const int du = dist[static_cast<std::size_t>(u)];
    if (du >= limit) continue;
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> out(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, static_cast<int>(s));
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return out;
}

int diameter(const Graph& g) {
  int best = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (int d : bfs_distances(g, static_cast<int>(s))) {
      if (d != kUnreachable) best = std::max(best, d);
    }
  }
  return best;
}

std::vector<int> components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  int next = 0;
  std::vector<int> stack;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t component_count(const Graph& g) {
  const auto comp = components(g);
  return comp.empty() ? 0 : static_cast<std::size_t>(*std::max_element(comp.begin(), comp.end()) + 1);
}

std::optional<int> girth(const Graph& g) {
  // For each edge (u,v): shortest u-v path avoiding that edge, plus one.
  int best = kUnreachable;
  const std::size_t n = g.size();
  std::vector<int> dist(n);
  std::vector<int> queue;
  for (const auto& [u, v] : g.edges()) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.assign(1, u);
    dist[static_cast<std::size_t>(u)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      const int dx = dist[static_cast<std::size_t>(x)];
      if (dx + 2 >= best) break;
      for (int y : g.neighbors(x)) {
        if (x == u && y == v) continue;
        if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
          dist[static_cast<std::size_t>(y)] = dx + 1;
          queue.push_back(y);
        }
      }
      if (dist[static_cast<std::size_t>(v)] != kUnreachable) break;
    }
    if (dist[static_cast<std::size_t>(v)] != kUnreachable) best = std::min(best, dist[static_cast<std::size_t>(v)] + 1);
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.size()) throw PreconditionError("induced_subgraph: vertex set universe mismatch");
  InducedSubgraph out;
  out.to_parent = keep.to_vector();
  std::vector<int> local(g.size(), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (int w : g.neighbors(out.to_parent[i])) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), j);
    }
  }
  out.graph = Graph::from_edges(out.to_parent.size(), e);
  return out;
}

Graph graph_power(const Graph& g, int radius) {
  if (radius < 1) throw PreconditionError("graph_power: radius must be at least 1");
  if (radius == 1) return g;
  std::vector<Edge> e;
  for (std::size_t s = 0; s < g.size(); ++s) {
    VertexSet src(g.size());
    src.insert(static_cast<int>(s));
    const auto dist = multi_source_bfs(g, src, radius);
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      if (dist[t] <= radius) e.emplace_back(static_cast<int>(s), static_cast<int>(t));
    }
  }
  return Graph::from_edges(g.size(), e);
}

Graph relabel(const Graph& g, std::span<const int> new_to_old) {
  if (new_to_old.size() != g.size()) throw PreconditionError("relabel: permutation size mismatch");
  std::vector<int> old_to_new(g.size(), -1);
  for (std::size_t i = 0; i < new_to_old.size(); ++i) {
    const int o = new_to_old[i];
    if (o < 0 || static_cast<std::size_t>(o) >= g.size() || old_to_new[static_cast<std::size_t>(o)] != -1) {
      throw PreconditionError("relabel: not a permutation");
    }
    old_to_new[static_cast<std::size_t>(o)] = static_cast<int>(i);
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    int a = old_to_new[static_cast<std::size_t>(u)];
    int b = old_to_new[static_cast<std::size_t>(v)];
    if (a > b) std::swap(a, b);
    e.emplace_back(a, b);
  }
  std::sort(e.begin(), e.end());
  return Graph::from_edges(g.size(), e);
}

}  // namespace asymex
