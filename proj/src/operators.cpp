// SPDX-License-Identifier: Apache-2.0
#include "asymex/operators.hpp"

#include <algorithm>
#include <cmath>

#include "asymex/errors.hpp"
#include "asymex/exact.hpp"
#include "asymex/parallel.hpp"
#include "asymex/rng.hpp"

namespace asymex {

BlockOperator::BlockOperator(std::vector<std::size_t> sizes, std::vector<std::vector<double>> blocks, Kind kind)
    : sizes_(std::move(sizes)), blocks_(std::move(blocks)), kind_(kind) {
  if (sizes_.size() != blocks_.size()) throw PreconditionError("BlockOperator: one matrix per block required");
  for (std::size_t n = 0; n < sizes_.size(); ++n) {
    if (blocks_[n].size() != sizes_[n] * sizes_[n]) throw PreconditionError("BlockOperator: block shape mismatch");
  }
}

std::size_t BlockOperator::total_size() const noexcept {
  std::size_t t = 0;
  for (auto s : sizes_) t += s;
  return t;
}

BlockOperator operator-(const BlockOperator& a, const BlockOperator& b) {
  if (a.sizes_ != b.sizes_) throw PreconditionError("BlockOperator: block sizes differ");
  auto blocks = a.blocks_;
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    for (std::size_t i = 0; i < blocks[n].size(); ++i) blocks[n][i] -= b.blocks_[n][i];
  }
  return BlockOperator(a.sizes_, std::move(blocks));
}

namespace {

void check_dense(std::size_t m) {
  if (m > kMaxDenseBlock) throw PreconditionError("block of " + std::to_string(m) + " points exceeds the dense limit");
}

}  // namespace

BlockOperator averaging_projection(const Family& family) {
  std::vector<std::vector<double>> blocks;
  for (auto m : family.block_sizes()) {
    check_dense(m);
    blocks.emplace_back(m * m, 1.0 / static_cast<double>(m));
  }
  return BlockOperator(family.block_sizes(), std::move(blocks), BlockOperator::Kind::averaging);
}

BlockOperator compressed_projection(const Family& family, std::span<const VertexSet> Y) {
  if (Y.size() != family.block_count()) throw PreconditionError("compressed_projection: one set per block required");
  std::vector<std::vector<double>> blocks;
  for (std::size_t n = 0; n < Y.size(); ++n) {
    const std::size_t m = family.block_size(n);
    check_dense(m);
    if (Y[n].universe() != m) throw PreconditionError("compressed_projection: set universe mismatch");
    const auto members = Y[n].to_vector();
    if (members.empty()) throw PreconditionError("compressed_projection: empty Y in block " + std::to_string(n));
    std::vector<double> b(m * m, 0.0);
    const double w = 1.0 / static_cast<double>(members.size());
    for (int i : members) {
      for (int j : members) b[static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)] = w;
    }
    blocks.push_back(std::move(b));
  }
  return BlockOperator(family.block_sizes(), std::move(blocks));
}

double frobenius_norm(const BlockOperator& T) {
  double s = 0.0;
  for (std::size_t n = 0; n < T.block_count(); ++n) {
    for (double x : T.block(n)) s += x * x;
  }
  return std::sqrt(s);
}

double dense_operator_norm(std::span<const double> a, std::size_t m, double tol, int max_iterations) {
  if (a.size() != m * m) throw PreconditionError("dense_operator_norm: shape mismatch");
  if (m == 0) return 0.0;
  bool zero = true;
  for (double x : a) zero = zero && x == 0.0;
  if (zero) return 0.0;
  std::vector<double> v(m), u(m), w(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = 1.0 + 0.01 * static_cast<double>(i + 1) / static_cast<double>(m);
  auto normalize = [](std::vector<double>& x) {
    double s = 0.0;
    for (double y : x) s += y * y;
    s = std::sqrt(s);
    if (s > 0.0) {
      for (double& y : x) y /= s;
    }
    return s;
  };
  normalize(v);
  double lambda = -1.0;
  for (int it = 0; it < max_iterations; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += a[i * m + j] * v[j];
      u[i] = s;
    }
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) w[j] += a[i * m + j] * u[i];
    }
    double rq = 0.0;
    for (std::size_t i = 0; i < m; ++i) rq += v[i] * w[i];
    const double norm = normalize(w);
    if (norm == 0.0) {
      // Start vector in the kernel: restart from a coordinate vector.
      std::fill(v.begin(), v.end(), 0.0);
      v[static_cast<std::size_t>(it) % m] = 1.0;
      continue;
    }
    v.swap(w);
    if (std::abs(rq - lambda) <= tol * std::max(1.0, rq)) return std::sqrt(std::max(0.0, rq));
    lambda = rq;
  }
  throw ConvergenceError("power iteration did not converge", std::abs(lambda));
}

double operator_norm(const BlockOperator& T) {
  std::vector<double> norms(T.block_count(), 0.0);
  parallel_for(T.block_count(), [&](std::size_t n) { norms[n] = dense_operator_norm(T.block(n), T.block_size(n)); });
  return norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
}

ApproximationError approximation_error(const Family& family, const Exhaustion& E, std::size_t k) {
  if (k >= E.levels() || E.blocks() != family.block_count()) throw PreconditionError("approximation_error: bad level");
  std::vector<VertexSet> Y;
  ApproximationError r;
  for (std::size_t n = 0; n < family.block_count(); ++n) {
    Y.push_back(E.cells[k][n].Y);
    r.alpha = std::max(r.alpha, 1.0 - static_cast<double>(Y.back().count()) / static_cast<double>(family.block_size(n)));
  }
  r.measured = operator_norm(averaging_projection(family) - compressed_projection(family, Y));
  r.bound = std::sqrt(2.0 * r.alpha);
  r.holds = r.measured <= r.bound + 1e-9;
  return r;
}

namespace {

std::vector<int> local_members(const Family& family, const VertexSet& S, std::size_t n) {
  std::vector<int> out;
  const std::size_t start = family.start(n), m = family.block_size(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (S.contains(static_cast<int>(start + i))) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::size_t> block_starts(const BlockOperator& T) {
  std::vector<std::size_t> s;
  std::size_t acc = 0;
  for (std::size_t n = 0; n < T.block_count(); ++n) {
    s.push_back(acc);
    acc += T.block_size(n);
  }
  return s;
}

void check_universe(const BlockOperator& T, const VertexSet& S) {
  if (S.universe() != T.total_size()) throw PreconditionError("point set universe does not match the operator");
}

}  // namespace

double cut_norm(const BlockOperator& T, const VertexSet& A, const VertexSet& B) {
  if (T.kind() != BlockOperator::Kind::averaging) return cut_norm_generic(T, A, B);
  check_universe(T, A);
  check_universe(T, B);
  const auto starts = block_starts(T);
  double best = 0.0;
  for (std::size_t n = 0; n < T.block_count(); ++n) {
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < T.block_size(n); ++i) {
      a += A.contains(static_cast<int>(starts[n] + i)) ? 1 : 0;
      b += B.contains(static_cast<int>(starts[n] + i)) ? 1 : 0;
    }
    best = std::max(best, std::sqrt(static_cast<double>(a) * static_cast<double>(b)) / static_cast<double>(T.block_size(n)));
  }
  return best;
}

double cut_norm_generic(const BlockOperator& T, const VertexSet& A, const VertexSet& B) {
  check_universe(T, A);
  check_universe(T, B);
  const auto starts = block_starts(T);
  double best = 0.0;
  for (std::size_t n = 0; n < T.block_count(); ++n) {
    const std::size_t m = T.block_size(n);
    std::vector<double> masked(T.block(n));
    for (std::size_t i = 0; i < m; ++i) {
      const bool row = A.contains(static_cast<int>(starts[n] + i));
      for (std::size_t j = 0; j < m; ++j) {
        if (!row || !B.contains(static_cast<int>(starts[n] + j))) masked[i * m + j] = 0.0;
      }
    }
    best = std::max(best, dense_operator_norm(masked, m));
  }
  return best;
}

namespace {

/// x ~ y iff 0 < d(x, y) < R: then d(x, A) >= R iff x is outside A and its neighbourhood.
Graph near_graph(const Space& X, int R) {
  if (R <= 1) return Graph::from_edges(space_size(X), {});
  if (const auto* g = std::get_if<Graph>(&X)) return graph_power(*g, R - 1);
  return r_adjacency_graph(X, static_cast<double>(R) - 2.0 * kMetricTol);
}

double nu_value(std::size_t a, std::size_t b, std::size_t m) {
  return std::sqrt(static_cast<double>(a) * static_cast<double>(b)) / static_cast<double>(m);
}

std::vector<double> exact_nu(const Space& X, int R_max) {
  const std::size_t m = space_size(X);
  std::vector<double> nu(static_cast<std::size_t>(R_max), 0.0);
  const auto all = exact::all_vertices(m);
  const auto* g = std::get_if<Graph>(&X);
  const int diam = g && g->connected() ? diameter(*g) : R_max;
  for (int R = 1; R <= R_max && R <= diam; ++R) {
    const auto nb = exact::neighbor_masks(near_graph(X, R));
    double best = 0.0;
    exact::for_each_subset(all, nb, static_cast<int>(m), [&](exact::Mask s, exact::Mask cover, int size) {
      if (size == 0) return;
      const std::size_t b = m - static_cast<std::size_t>(exact::popcount(s | cover));
      best = std::max(best, nu_value(static_cast<std::size_t>(size), b, m));
    });
    nu[static_cast<std::size_t>(R - 1)] = best;
  }
  return nu;
}

/// Distance from every point to A (graphs: BFS; metrics: direct minimum).
std::vector<double> distance_to(const Space& X, const std::vector<char>& in) {
  const std::size_t m = in.size();
  std::vector<double> d(m, std::numeric_limits<double>::infinity());
  if (const auto* g = std::get_if<Graph>(&X)) {
    VertexSet src(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (in[i]) src.insert(static_cast<int>(i));
    }
    const auto bfs = multi_source_bfs(*g, src);
    for (std::size_t i = 0; i < m; ++i) {
      if (bfs[i] != kUnreachable) d[i] = bfs[i];
    }
    return d;
  }
  const auto& ms = std::get<FiniteMetricSpace>(X);
  for (std::size_t a = 0; a < m; ++a) {
    if (!in[a]) continue;
    for (std::size_t x = 0; x < m; ++x) d[x] = std::min(d[x], ms.distance(static_cast<int>(a), static_cast<int>(x)));
  }
  return d;
}

/// Best value per R for one set A.
void score(const std::vector<double>& d, std::size_t a, int R_max, std::vector<double>& nu) {
  const std::size_t m = d.size();
  for (int R = 1; R <= R_max; ++R) {
    std::size_t b = 0;
    for (double x : d) b += x >= R - kMetricTol ? 1 : 0;
    nu[static_cast<std::size_t>(R - 1)] = std::max(nu[static_cast<std::size_t>(R - 1)], nu_value(a, b, m));
  }
}

std::vector<double> heuristic_nu(const Space& X, int R_max, const SearchOptions& opts, std::uint64_t salt) {
  const std::size_t m = space_size(X);
  std::vector<double> nu(static_cast<std::size_t>(R_max), 0.0);
  std::vector<std::vector<char>> best_set(static_cast<std::size_t>(R_max));
  // Ball seeds: A = closed ball B(v, r).
  const double diam = space_diameter(X);
  const int rmax = static_cast<int>(std::floor(diam + kMetricTol));
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<char> zero(m, 0);
    zero[v] = 1;
    const auto dv = distance_to(X, zero);
    for (int r = 0; r <= rmax; ++r) {
      std::vector<char> in(m, 0);
      std::size_t a = 0;
      for (std::size_t x = 0; x < m; ++x) {
        if (dv[x] <= r + kMetricTol) {
          in[x] = 1;
          ++a;
        }
      }
      std::vector<double> local(static_cast<std::size_t>(R_max), 0.0);
      score(distance_to(X, in), a, R_max, local);
      for (std::size_t i = 0; i < local.size(); ++i) {
        if (local[i] > nu[i]) {
          nu[i] = local[i];
          best_set[i] = in;
        }
      }
    }
  }
  // Single-point flips from the best seed of each radius.
  SplitMix64 rng(mix_seed(opts.seed, salt, 0x9a));
  for (int R = 1; R <= R_max; ++R) {
    auto& in = best_set[static_cast<std::size_t>(R - 1)];
    if (in.empty()) continue;
    std::size_t a = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    for (std::size_t step = 0; step < opts.budget; ++step) {
      const auto x = static_cast<std::size_t>(rng.below(m));
      if (in[x] && a == 1) continue;
      in[x] ^= 1;
      const std::size_t a2 = in[x] ? a + 1 : a - 1;
      const auto d = distance_to(X, in);
      std::size_t b = 0;
      for (double y : d) b += y >= R - kMetricTol ? 1 : 0;
      const double val = nu_value(a2, b, m);
      if (val > nu[static_cast<std::size_t>(R - 1)]) {
        nu[static_cast<std::size_t>(R - 1)] = val;
        a = a2;
      } else {
        in[x] ^= 1;
      }
    }
  }
  for (int i = R_max - 2; i >= 0; --i) {
    nu[static_cast<std::size_t>(i)] = std::max(nu[static_cast<std::size_t>(i)], nu[static_cast<std::size_t>(i) + 1]);
  }
  return nu;
}

}  // namespace

PropagationProfile propagation_profile(const Family& family, std::span<const double> epsilons, int R_max,
                                       ModeRequest mode, const SearchOptions& opts) {
  if (R_max < 1) throw PreconditionError("propagation_profile: R_max must be at least 1");
  for (double e : epsilons) {
    if (!(e > 0.0)) throw PreconditionError("propagation_profile: epsilon values must be positive");
  }
  PropagationProfile p;
  p.epsilons.assign(epsilons.begin(), epsilons.end());
  p.R_max = R_max;
  const std::size_t B = family.block_count();
  p.nu.resize(B);
  p.modes.resize(B);
  for (std::size_t n = 0; n < B; ++n) p.modes[n] = resolve_mode(mode, family.block_size(n), opts.exact_cap);
  parallel_for(B, [&](std::size_t n) {
    p.nu[n] = p.modes[n] == Mode::exact ? exact_nu(family.block(n), R_max)
                                        : heuristic_nu(family.block(n), R_max, opts, n);
  });
  for (double e : p.epsilons) {
    std::optional<int> found;
    for (int R = 1; R <= R_max && !found; ++R) {
      double worst = 0.0;
      for (const auto& curve : p.nu) worst = std::max(worst, curve[static_cast<std::size_t>(R - 1)]);
      if (worst <= e) found = R;
    }
    p.radius.push_back(found);
  }
  return p;
}

double ghost_defect(const BlockOperator& T, const Family& family, const VertexSet& F) {
  if (T.block_count() != family.block_count()) throw PreconditionError("ghost_defect: operator does not match family");
  check_universe(T, F);
  double best = 0.0;
  for (std::size_t n = 0; n < T.block_count(); ++n) {
    const auto inside = local_members(family, F, n);
    const std::size_t m = T.block_size(n);
    if (inside.size() == m) continue;
    if (T.kind() == BlockOperator::Kind::averaging) {
      best = std::max(best, 1.0 / static_cast<double>(m));
      continue;
    }
    std::vector<char> in(m, 0);
    for (int i : inside) in[static_cast<std::size_t>(i)] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!(in[i] && in[j])) best = std::max(best, std::abs(T.entry(n, i, j)));
      }
    }
  }
  return best;
}

}  // namespace asymex
