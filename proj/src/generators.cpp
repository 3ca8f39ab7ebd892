// SPDX-License-Identifier: Apache-2.0
#include "asymex/generators.hpp"

#include <algorithm>
#include <set>

#include "asymex/errors.hpp"
#include "asymex/format.hpp"
#include "asymex/parallel.hpp"
#include "asymex/rng.hpp"
#include "asymex/spectral.hpp"

namespace asymex {

std::size_t ceil_log2(std::size_t n) {
  if (n == 0) throw PreconditionError("ceil_log2: n must be positive");
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("random_connected_graph: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("random_connected_graph: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  shuffle(std::span<int>(order), rng);
  std::set<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const int u = order[i], v = order[rng.below(i)];
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const Edge e{static_cast<int>(u), static_cast<int>(v)};
      if (!edges.count(e) && rng.unit() < p) edges.insert(e);
    }
  }
  return Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph random_regular_expander(std::size_t n, int d, std::uint64_t seed, std::optional<double> gap_threshold,
                              int retries) {
  if (d < 3 || static_cast<std::size_t>(d) >= n) throw PreconditionError("random_regular_expander: need 3 <= d < n");
  if ((n * static_cast<std::size_t>(d)) % 2 != 0) throw PreconditionError("random_regular_expander: n d must be even");
  if (retries <= 0) throw PreconditionError("random_regular_expander: retries must be positive");
  const double threshold = gap_threshold.value_or(0.05 * d);
  if (n == static_cast<std::size_t>(d) + 1) {
    Graph g = complete_graph(n);
    const double gap = spectral_gap(g);
    if (gap < threshold) throw GenerationError("complete graph misses the gap threshold", gap);
    return g;
  }
  SplitMix64 rng(mix_seed(seed, n, static_cast<std::uint64_t>(d)));
  std::vector<int> stubs;
  stubs.reserve(n * static_cast<std::size_t>(d));
  double best_gap = 0.0;
  for (int attempt = 0; attempt < retries; ++attempt) {
    stubs.clear();
    for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(d), static_cast<int>(v));
    shuffle(std::span<int>(stubs), rng);
    std::vector<Edge> edges;
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        simple = false;
        break;
      }
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) {
        simple = false;
        break;
      }
      edges.emplace_back(a, b);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    Graph g = Graph::from_edges(n, edges);
    if (!g.connected()) continue;
    const double gap = spectral_gap(g);
    best_gap = std::max(best_gap, gap);
    if (gap >= threshold) return g;
  }
  throw GenerationError("random_regular_expander: no sample met the gap threshold after " + std::to_string(retries) +
                            " attempts",
                        best_gap);
}

Graph perturbed(const Graph& Y, const Graph& Z, std::span<const Edge> join) {
  const int ny = static_cast<int>(Y.size()), nz = static_cast<int>(Z.size());
  std::vector<Edge> extra;
  for (auto [y, z] : join) {
    if (y < 0 || y >= ny || z < 0 || z >= nz) throw PreconditionError("perturbed: join edge endpoint out of range");
    extra.emplace_back(y, ny + z);
  }
  const Graph parts[] = {Y, Z};
  Graph X = disjoint_union(parts, extra);
  if (!X.connected()) throw PreconditionError("perturbed: result is disconnected");
  return X;
}

Graph girth_splice(const Graph& Y, const Graph& Z, Edge yy, Edge zz) {
  if (!Y.has_edge(yy.first, yy.second)) throw PreconditionError("girth_splice: (y, y') is not an edge of Y");
  if (!Z.has_edge(zz.first, zz.second)) throw PreconditionError("girth_splice: (z, z') is not an edge of Z");
  const int ny = static_cast<int>(Y.size());
  auto norm = [](int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  const Edge drop_y = norm(yy.first, yy.second), drop_z = norm(ny + zz.first, ny + zz.second);
  std::vector<Edge> edges;
  for (auto e : Y.edges()) {
    if (e != drop_y) edges.push_back(e);
  }
  for (auto [a, b] : Z.edges()) {
    if (Edge{ny + a, ny + b} != drop_z) edges.emplace_back(ny + a, ny + b);
  }
  edges.push_back(norm(yy.first, ny + zz.first));
  edges.push_back(norm(yy.second, ny + zz.second));
  return Graph::from_edges(Y.size() + Z.size(), edges);
}

std::size_t default_tower_schedule(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("tower schedule: n and k must be positive");
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const auto kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  return (nn + kk - 1) / kk;
}

namespace {

std::size_t adjusted_level_size(std::size_t a, int d) {
  if (a <= static_cast<std::size_t>(d)) return a;
  return (a * static_cast<std::size_t>(d)) % 2 == 0 ? a : a + 1;
}

Graph level_graph(std::size_t size, int d, std::uint64_t seed) {
  if (size <= static_cast<std::size_t>(d)) return complete_graph(size);
  return random_regular_expander(size, d, seed);
}

}  // namespace

Tower tower(int n, const TowerSchedule& schedule, int d, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("tower: n must be positive");
  if (d < 3) throw PreconditionError("tower: d must be at least 3");
  Tower t;
  for (int k = 1; k <= n; ++k) {
    const std::size_t a = schedule(n, k);
    if (a == 0) throw PreconditionError("tower: schedule values must be positive");
    if (!t.requested.empty() && a > t.requested.back()) {
      throw PreconditionError("tower: schedule increases at k=" + std::to_string(k));
    }
    t.requested.push_back(a);
    t.level_sizes.push_back(adjusted_level_size(a, d));
  }
  std::vector<Graph> levels(t.level_sizes.size());
  parallel_for(levels.size(), [&](std::size_t i) {
    levels[i] = level_graph(t.level_sizes[i], d, mix_seed(seed, static_cast<std::uint64_t>(n), i + 1));
  });
  std::vector<Edge> links;
  std::size_t start = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    t.level_starts.push_back(start);
    if (i > 0) {
      for (std::size_t v = 0; v < t.level_sizes[i]; ++v) {
        links.emplace_back(static_cast<int>(t.level_starts[i - 1] + v), static_cast<int>(start + v));
      }
    }
    start += t.level_sizes[i];
  }
  t.graph = disjoint_union(levels, links);
  return t;
}

ScheduleConditions check_tower_schedule(const TowerSchedule& schedule, std::span<const int> ns, double alpha, double c) {
  ScheduleConditions out;
  out.alpha = alpha;
  out.c = c;
  if (ns.empty()) return out;
  const int top = *std::max_element(ns.begin(), ns.end());
  auto tail = [&](int n, int from) {
    double s = 0.0;
    for (int i = from; i <= n; ++i) s += static_cast<double>(schedule(n, i));
    return s;
  };
  for (int kbar = 1; kbar <= top && !out.kbar_tail; ++kbar) {
    bool ok = true;
    for (int n : ns) {
      if (n >= kbar && !(tail(n, kbar) < alpha * tail(n, 1))) ok = false;
    }
    if (ok) out.kbar_tail = kbar;
  }
  for (int kbar = 1; kbar <= top && !out.kbar_ratio; ++kbar) {
    bool ok = true;
    for (int n : ns) {
      if (n >= kbar && !(static_cast<double>(schedule(n, kbar)) < c * tail(n, kbar))) ok = false;
    }
    if (ok) out.kbar_ratio = kbar;
  }
  return out;
}

StringQuotient string_quotient(int n, int d, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("string_quotient: n must be at least 2");
  StringQuotient sq;
  sq.block_len = ceil_log2(static_cast<std::size_t>(n));
  std::size_t base = static_cast<std::size_t>(n) * sq.block_len;
  if ((base * static_cast<std::size_t>(d)) % 2 != 0) {
    ++base;
    sq.parity_adjusted = true;
  }
  if (base <= static_cast<std::size_t>(d)) throw PreconditionError("string_quotient: n too small for a d-regular expander");
  sq.base_size = base;
  const Graph raw = random_regular_expander(base, d, seed);
  std::vector<int> order;
  order.reserve(base);
  std::vector<char> seen(base, 0);
  seen[0] = 1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : raw.neighbors(order[head])) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        order.push_back(w);
      }
    }
  }
  const Graph base_graph = relabel(raw, order);

  const int nb = static_cast<int>(base);
  std::vector<Edge> edges = base_graph.edges();
  for (int i = 0; i < n; ++i) sq.path.push_back(nb + i);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(nb + i, nb + i + 1);
  edges.emplace_back(0, nb + n - 1);
  std::sort(edges.begin(), edges.end());
  sq.X = Graph::from_edges(base + static_cast<std::size_t>(n), edges);

  const int L = static_cast<int>(sq.block_len);
  sq.pi.resize(sq.X.size());
  for (int x = 0; x < nb; ++x) sq.pi[static_cast<std::size_t>(x)] = std::min(x / L, n - 1);
  for (int i = 0; i < n; ++i) sq.pi[static_cast<std::size_t>(nb + i)] = n + i;
  std::set<Edge> qedges;
  for (auto [a, b] : edges) {
    int pa = sq.pi[static_cast<std::size_t>(a)], pb = sq.pi[static_cast<std::size_t>(b)];
    if (pa == pb) continue;
    if (pa > pb) std::swap(pa, pb);
    qedges.insert({pa, pb});
  }
  const std::vector<Edge> qe(qedges.begin(), qedges.end());
  sq.Y = Graph::from_edges(2 * static_cast<std::size_t>(n), qe);
  return sq;
}

Graph dumbbell(std::size_t n, std::size_t bridge_len) {
  if (n < 2) throw PreconditionError("dumbbell: n must be at least 2");
  const Graph parts[] = {complete_graph(n), complete_graph(n), path_graph(bridge_len)};
  std::vector<Edge> links;
  const int left = 0, right = static_cast<int>(n), first = static_cast<int>(2 * n);
  if (bridge_len == 0) {
    links.emplace_back(left, right);
  } else {
    links.emplace_back(left, first);
    links.emplace_back(right, first + static_cast<int>(bridge_len) - 1);
  }
  if (bridge_len == 0) return disjoint_union(std::span<const Graph>(parts, 2), links);
  return disjoint_union(parts, links);
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::expander: return "expander";
    case Classification::asymptotic_only: return "asymptotic-only";
    case Classification::negative_control: return "negative-control";
  }
  return "unknown";
}

std::vector<Graph> GeneratedFamily::graphs() const {
  std::vector<Graph> out;
  for (const auto& m : members) out.push_back(m.graph);
  return out;
}

GeneratedFamily generate(const GenSpec& spec) {
  static const std::set<std::string> kinds{"random_regular", "perturbed",       "girth_splice",
                                           "tower",          "string_quotient", "dumbbell"};
  if (!kinds.count(spec.kind)) throw PreconditionError("unknown generator kind '" + spec.kind + "'");
  if (spec.ns.empty()) throw PreconditionError("generator needs at least one n");
  if (spec.d < 3) throw PreconditionError("generator degree d must be at least 3");
  for (std::size_t i = 1; i < spec.ns.size(); ++i) {
    if (spec.ns[i] <= spec.ns[i - 1]) throw PreconditionError("generator n values must be strictly increasing");
  }
  GeneratedFamily fam;
  fam.spec = spec;
  fam.label = spec.kind + "-d" + std::to_string(spec.d) + "-seed" + std::to_string(spec.seed);
  fam.members.resize(spec.ns.size());
  if (spec.kind == "random_regular") fam.classification = Classification::expander;
  else if (spec.kind == "dumbbell") fam.classification = Classification::negative_control;
  else fam.classification = Classification::asymptotic_only;

  parallel_for(spec.ns.size(), [&](std::size_t i) {
    const int n = spec.ns[i];
    if (n < 2) throw PreconditionError("generator n values must be at least 2");
    const std::uint64_t s = mix_seed(spec.seed, static_cast<std::uint64_t>(n), 0);
    FamilyMember& m = fam.members[i];
    m.n = n;
    const auto un = static_cast<std::size_t>(n);
    const auto adjust = [&](std::size_t size) {
      if ((size * static_cast<std::size_t>(spec.d)) % 2 == 0) return size;
      m.notes.push_back("size " + std::to_string(size) + " raised to " + std::to_string(size + 1) + " for parity");
      return size + 1;
    };
    if (spec.kind == "random_regular") {
      m.graph = random_regular_expander(adjust(un), spec.d, s);
    } else if (spec.kind == "perturbed") {
      const Graph Y = random_regular_expander(adjust(un), spec.d, s);
      const Graph Z = path_graph(std::max<std::size_t>(1, ceil_log2(un)));
      const Edge join[] = {{0, 0}};
      m.graph = perturbed(Y, Z, join);
    } else if (spec.kind == "girth_splice") {
      const Graph Y = random_regular_expander(adjust(un), spec.d, s);
      const Graph Z = cycle_graph(std::max<std::size_t>(3, ceil_log2(un)));
      m.graph = girth_splice(Y, Z, Y.edges().front(), Z.edges().front());
    } else if (spec.kind == "tower") {
      const Tower t = tower(n, default_tower_schedule, spec.d, s);
      for (std::size_t k = 0; k < t.requested.size(); ++k) {
        if (t.requested[k] != t.level_sizes[k]) {
          m.notes.push_back("level " + std::to_string(k + 1) + " size " + std::to_string(t.requested[k]) +
                            " raised to " + std::to_string(t.level_sizes[k]) + " for parity");
        }
      }
      m.graph = t.graph;
    } else if (spec.kind == "string_quotient") {
      auto sq = string_quotient(n, spec.d, s);
      if (sq.parity_adjusted) m.notes.push_back("base size raised by 1 for parity");
      m.graph = std::move(sq.X);
      m.quotient = std::move(sq.Y);
      m.quotient_map = std::move(sq.pi);
    } else {
      m.graph = dumbbell(un, spec.bridge_len.value_or(un));
    }
    m.girth = girth(m.graph);
  });
  for (const auto& m : fam.members) fam.max_degree = std::max(fam.max_degree, m.graph.max_degree());
  return fam;
}

}  // namespace asymex
