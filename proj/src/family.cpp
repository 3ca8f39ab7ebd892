// SPDX-License-Identifier: Apache-2.0
#include "asymex/family.hpp"

#include <algorithm>
#include <string>

#include "asymex/errors.hpp"

namespace asymex {

Family coarse_disjoint_union(std::vector<Space> blocks, std::string label) {
  if (blocks.empty()) throw PreconditionError("coarse_disjoint_union: no blocks");
  Family f;
  f.label_ = std::move(label);
  double diam_sum = 0.0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::size_t size = space_size(blocks[i]);
    if (size == 0) throw PreconditionError("coarse_disjoint_union: block " + std::to_string(i + 1) + " is empty");
    if (const auto* g = std::get_if<Graph>(&blocks[i]); g && !g->connected()) {
      f.warnings_.push_back("block " + std::to_string(i + 1) + " is disconnected");
    }
    if (i > 0 && size < f.sizes_.back()) {
      f.warnings_.push_back("block " + std::to_string(i + 1) + " is smaller than block " + std::to_string(i));
    }
    diam_sum += space_diameter(blocks[i]);
    f.sizes_.push_back(size);
    f.offsets_.push_back(static_cast<double>(i + 1) + diam_sum);
    f.starts_.push_back(start);
    start += size;
  }
  f.total_ = start;
  f.blocks_ = std::move(blocks);
  return f;
}

Family graph_family(const std::vector<Graph>& graphs, std::string label) {
  std::vector<Space> blocks(graphs.begin(), graphs.end());
  return coarse_disjoint_union(std::move(blocks), std::move(label));
}

bool Family::all_graphs() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Space& s) { return std::holds_alternative<Graph>(s); });
}

const Graph& Family::graph(std::size_t i) const {
  const auto* g = std::get_if<Graph>(&blocks_.at(i));
  if (!g) throw PreconditionError("block " + std::to_string(i + 1) + " is not a graph");
  return *g;
}

std::pair<std::size_t, int> Family::locate(std::size_t global) const {
  if (global >= total_) throw PreconditionError("point id outside the family");
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), global);
  const std::size_t b = static_cast<std::size_t>(it - starts_.begin()) - 1;
  return {b, static_cast<int>(global - starts_[b])};
}

double Family::distance(std::size_t x, std::size_t y) const {
  const auto [bx, lx] = locate(x);
  const auto [by, ly] = locate(y);
  if (bx != by) return offsets_[bx] + offsets_[by];
  return space_distance(blocks_[bx], lx, ly);
}

std::vector<EmbeddingDefect> weak_embedding_defect(const std::vector<Graph>& sources,
                                                   const std::vector<std::vector<int>>& maps,
                                                   const std::vector<Graph>& targets, int R) {
  if (maps.size() != sources.size()) throw PreconditionError("weak_embedding_defect: one map per block required");
  if (targets.size() != 1 && targets.size() != sources.size()) {
    throw PreconditionError("weak_embedding_defect: need one target or one per block");
  }
  if (R < 0) throw PreconditionError("weak_embedding_defect: R must be nonnegative");
  std::vector<EmbeddingDefect> out;
  for (std::size_t b = 0; b < sources.size(); ++b) {
    const Graph& X = sources[b];
    const Graph& Y = targets.size() == 1 ? targets[0] : targets[b];
    const auto& f = maps[b];
    if (f.size() != X.size()) throw PreconditionError("weak_embedding_defect: map is not total on block " + std::to_string(b + 1));
    std::vector<std::size_t> fiber(Y.size(), 0);
    for (int y : f) {
      if (y < 0 || static_cast<std::size_t>(y) >= Y.size()) throw PreconditionError("weak_embedding_defect: image outside target");
      ++fiber[static_cast<std::size_t>(y)];
    }
    EmbeddingDefect d;
    d.block = b;
    // Preimage of a ball depends only on its center f(x).
    std::vector<long long> ball_mass(Y.size(), -1);
    for (std::size_t x = 0; x < X.size(); ++x) {
      const int c = f[x];
      if (ball_mass[static_cast<std::size_t>(c)] < 0) {
        VertexSet src(Y.size());
        src.insert(c);
        const auto dist = multi_source_bfs(Y, src, R);
        long long mass = 0;
        for (std::size_t y = 0; y < Y.size(); ++y) {
          if (dist[y] <= R) mass += static_cast<long long>(fiber[y]);
        }
        ball_mass[static_cast<std::size_t>(c)] = mass;
      }
      const auto mass = static_cast<std::size_t>(ball_mass[static_cast<std::size_t>(c)]);
      if (mass > d.worst_preimage) {
        d.worst_preimage = mass;
        d.worst_point = static_cast<int>(x);
      }
    }
    d.defect = static_cast<double>(d.worst_preimage) / static_cast<double>(X.size());
    std::vector<std::vector<int>> dist_cache(Y.size());
    for (auto [u, v] : X.edges()) {
      const int a = f[static_cast<std::size_t>(u)];
      const int c = f[static_cast<std::size_t>(v)];
      if (a == c) continue;
      auto& row = dist_cache[static_cast<std::size_t>(a)];
      if (row.empty()) row = bfs_distances(Y, a);
      d.lipschitz = std::max(d.lipschitz, row[static_cast<std::size_t>(c)]);
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace asymex
