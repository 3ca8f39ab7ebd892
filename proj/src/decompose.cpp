// SPDX-License-Identifier: Apache-2.0
#include "asymex/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "asymex/errors.hpp"
#include "asymex/exact.hpp"
#include "asymex/format.hpp"
#include "asymex/parallel.hpp"
#include "asymex/rng.hpp"

namespace asymex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double value_or_inf(const std::optional<Ratio>& r) { return r ? r->value() : kInf; }

std::vector<double> sorted_alphas(std::span<const double> alphas, double upper, const char* what) {
  std::vector<double> a(alphas.begin(), alphas.end());
  if (a.empty()) throw PreconditionError(std::string(what) + ": need at least one alpha");
  for (double x : a) {
    if (!(x > 0.0 && x < upper)) {
      throw PreconditionError(std::string(what) + ": alpha " + format_double(x) + " outside (0, " +
                              format_double(upper) + ")");
    }
  }
  std::sort(a.begin(), a.end(), std::greater<>());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

struct Measured {
  std::optional<Ratio> h;
  Mode mode = Mode::exact;
  bool connected = true;
};

Measured measure(const Space& X, const VertexSet& Y, double R, const SearchOptions& opts, std::uint64_t salt) {
  Measured m;
  const auto sub = r_adjacency_subgraph(X, Y, R);
  m.connected = sub.graph.size() == 0 || component_count(sub.graph) == 1;
  if (sub.graph.size() < 2) return m;
  if (sub.graph.size() <= opts.exact_cap) {
    m.h = cheeger_exact(sub.graph, opts.exact_cap, 1).h;
  } else {
    SearchOptions o = opts;
    o.seed = mix_seed(opts.seed, salt, 0xd1);
    m.h = cheeger_heuristic(sub.graph, o).h;
    m.mode = Mode::heuristic;
  }
  return m;
}

void fill_cells(const Family& family, Exhaustion& E, ModeRequest mode, const SearchOptions& opts) {
  const std::size_t K = E.alphas.size(), B = family.block_count();
  E.cells.assign(K, std::vector<ExhaustionCell>(B));
  parallel_for(K * B, [&](std::size_t idx) {
    const std::size_t k = idx / B, n = idx % B;
    const Space& X = family.block(n);
    SearchOptions o = opts;
    o.seed = mix_seed(opts.seed, n, k);
    FolnerCertificate cert;
    cert.F = VertexSet(family.block_size(n));
    cert.mode = resolve_mode(mode, family.block_size(n), opts.exact_cap);
    if (E.thresholds[k] > Ratio(0, 1)) {
      cert = maximal_folner(X, Threshold{E.thresholds[k], E.strict_threshold}, E.radii[k], mode, o);
    }
    ExhaustionCell& cell = E.cells[k][n];
    cell.F = cert.F;
    cell.Y = cert.F.complement();
    const auto m = measure(X, cell.Y, E.radii[k], o, idx);
    cell.measured = m.h;
    cell.connected = m.connected;
    cell.mode = cert.mode == Mode::heuristic || m.mode == Mode::heuristic ? Mode::heuristic : Mode::exact;
  });
  E.c_measured.assign(K, std::nullopt);
  E.modes.assign(K, Mode::exact);
  for (std::size_t k = 0; k < K; ++k) {
    for (const auto& cell : E.cells[k]) {
      if (cell.mode == Mode::heuristic) E.modes[k] = Mode::heuristic;
      if (cell.measured && (!E.c_measured[k] || cell.measured->value() < *E.c_measured[k])) {
        E.c_measured[k] = cell.measured->value();
      }
    }
  }
}

}  // namespace

double predicted_bound(double c_complement, double c_alpha, double alpha, int D) {
  if (!(alpha > 0.0 && alpha < 0.25)) throw PreconditionError("predicted_bound: alpha must lie in (0, 1/4)");
  if (D < 0) throw PreconditionError("predicted_bound: negative degree bound");
  const double v = c_complement - D * c_alpha * 2.0 * alpha / (1.0 - 2.0 * alpha);
  return std::isnan(v) ? -kInf : v;
}

double predicted_bound(const ExpansionProfile& profile, double alpha, int D) {
  return predicted_bound(value_or_inf(profile.at(0.5 - alpha).value), value_or_inf(profile.at(alpha).value), alpha, D);
}

Exhaustion graph_exhaustion(const Family& family, std::span<const double> alphas, ModeRequest mode,
                            const SearchOptions& opts) {
  if (!family.all_graphs()) throw PreconditionError("graph_exhaustion: every block must be a graph");
  Exhaustion E;
  E.alphas = sorted_alphas(alphas, 0.25, "graph_exhaustion");
  const std::size_t K = E.alphas.size(), B = family.block_count();
  E.radii.assign(K, 1.0);
  E.strict_threshold = true;
  E.strict_claim = false;
  for (std::size_t n = 0; n < B; ++n) E.max_degree = std::max(E.max_degree, family.graph(n).max_degree());

  std::vector<double> grid;
  for (double a : E.alphas) {
    grid.push_back(a);
    grid.push_back(0.5 - a);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<ExpansionProfile> profiles(B);
  parallel_for(B, [&](std::size_t n) {
    SearchOptions o = opts;
    o.seed = mix_seed(opts.seed, n, 0xe5);
    profiles[n] = expansion_profile(family.block(n), grid, 1.0, mode, o);
  });
  auto c_of = [&](double a) {
    std::optional<Ratio> best;
    for (const auto& p : profiles) {
      const auto& v = p.at(a).value;
      if (v && (!best || *v < *best)) best = v;
    }
    return best;
  };

  std::vector<double> predicted(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double a = E.alphas[k];
    const auto ca = c_of(a);
    predicted[k] = predicted_bound(value_or_inf(c_of(0.5 - a)), value_or_inf(ca), a, E.max_degree);
    E.thresholds.push_back(ca ? *ca : Ratio(0, 1));
    if (!E.alpha0 && ca && predicted[k] > ca->value()) E.alpha0 = a;
  }
  if (!E.alpha0) E.diagnostics.push_back("expander or range too short");

  fill_cells(family, E, mode, opts);
  for (std::size_t k = 0; k < K; ++k) {
    const double g = std::max(0.0, std::min(E.thresholds[k].value(), predicted[k]));
    E.c_guaranteed.push_back(g);
    if (E.alpha0 && E.alphas[k] > *E.alpha0) {
      E.diagnostics.push_back("alpha=" + format_double(E.alphas[k]) + " lies above alpha0");
    }
  }
  return E;
}

Exhaustion metric_exhaustion(const Family& family, const Ratio& c, std::span<const double> radii,
                             std::span<const double> alphas, ModeRequest mode, const SearchOptions& opts) {
  if (!(c > Ratio(0, 1))) throw PreconditionError("metric_exhaustion: c must be positive");
  if (radii.size() != 1 && radii.size() != alphas.size()) {
    throw PreconditionError("metric_exhaustion: need one radius or one per alpha");
  }
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < alphas.size(); ++i) pairs.emplace_back(alphas[i], radii.size() == 1 ? radii[0] : radii[i]);
  Exhaustion E;
  E.metric = true;
  E.alphas = sorted_alphas(alphas, 0.5 + 1e-12, "metric_exhaustion");
  for (double a : E.alphas) {
    for (auto [pa, pr] : pairs) {
      if (pa == a) {
        if (!(pr > 0.0)) throw PreconditionError("metric_exhaustion: radii must be positive");
        E.radii.push_back(pr);
        break;
      }
    }
  }
  const std::size_t K = E.alphas.size();
  E.thresholds.assign(K, c);
  E.strict_threshold = false;
  E.strict_claim = true;
  for (std::size_t n = 0; n < family.block_count(); ++n) {
    if (const auto* g = std::get_if<Graph>(&family.block(n))) E.max_degree = std::max(E.max_degree, g->max_degree());
  }
  fill_cells(family, E, mode, opts);
  E.c_guaranteed.assign(K, c.value() / 2.0);
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t n = 0; n < E.cells[k].size(); ++n) {
      const double removed = static_cast<double>(E.cells[k][n].F.count());
      if (removed >= E.alphas[k] * static_cast<double>(family.block_size(n))) {
        E.diagnostics.push_back("alpha=" + format_double(E.alphas[k]) + ": radius " + format_double(E.radii[k]) +
                                " too short for block " + std::to_string(n));
        break;
      }
    }
  }
  return E;
}

std::optional<VertexSet> lemma_counterexample(const Space& X, const VertexSet& F, const Ratio& c, double R,
                                              bool strict_family) {
  const std::size_t n = space_size(X);
  if (F.universe() != n) throw PreconditionError("lemma_counterexample: F universe mismatch");
  if (n > exact::kMaxCap) throw CapExceeded(n, exact::kMaxCap);
  const int max_size = static_cast<int>(n / 2) - static_cast<int>(F.count());
  if (max_size <= 0) return std::nullopt;
  const Graph adj = r_adjacency_graph(X, R);
  const auto nb = exact::neighbor_masks(adj);
  const exact::Mask fmask = F.to_mask();
  std::vector<int> allowed;
  for (std::size_t v = 0; v < n; ++v) {
    if (!F.contains(static_cast<int>(v))) allowed.push_back(static_cast<int>(v));
  }
  std::optional<VertexSet> bad;
  exact::for_each_subset(allowed, nb, max_size, [&](exact::Mask s, exact::Mask cover, int size) -> bool {
    if (size == 0) return true;
    const int b = exact::popcount(cover & ~s & ~fmask);
    const bool violates = strict_family ? c.strictly_admits(b, size) : c.admits(b, size);
    if (violates) {
      bad = exact::to_set(n, s);
      return false;
    }
    return true;
  });
  return bad;
}

std::optional<VertexSet> corollary_counterexample(const Graph& X, const VertexSet& F, const Ratio& c) {
  const std::size_t n = X.size();
  if (F.universe() != n) throw PreconditionError("corollary_counterexample: F universe mismatch");
  const auto sub = induced_subgraph(X, F.complement());
  const std::size_t m = sub.graph.size();
  if (m > exact::kMaxCap) throw CapExceeded(m, exact::kMaxCap);
  const auto nb = exact::neighbor_masks(sub.graph);
  const auto all = exact::all_vertices(m);
  const auto limit = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(F.count());
  std::optional<VertexSet> bad;
  exact::for_each_subset(all, nb, static_cast<int>(m / 2), [&](exact::Mask s, exact::Mask cover, int size) -> bool {
    if (size == 0 || 2 * size > limit) return true;
    if (c.admits(exact::popcount(cover & ~s), size)) {
      VertexSet A(n);
      for (int v : exact::to_set(m, s).to_vector()) A.insert(sub.to_parent[static_cast<std::size_t>(v)]);
      bad = A;
      return false;
    }
    return true;
  });
  return bad;
}

VerificationReport verify_exhaustion(const Family& family, const Exhaustion& E, const SearchOptions& opts) {
  const std::size_t K = E.levels(), B = family.block_count();
  if (E.cells.size() != K || E.radii.size() != K || E.c_guaranteed.size() != K || E.thresholds.size() != K) {
    throw PreconditionError("verify_exhaustion: exhaustion levels are inconsistent");
  }
  for (const auto& row : E.cells) {
    if (row.size() != B) throw PreconditionError("verify_exhaustion: exhaustion does not match the family");
  }
  std::vector<std::vector<Violation>> found(K * B);
  std::vector<char> heuristic(K * B, 0);
  parallel_for(K * B, [&](std::size_t idx) {
    const std::size_t k = idx / B, n = idx % B;
    const Space& X = family.block(n);
    const ExhaustionCell& cell = E.cells[k][n];
    const std::size_t size = family.block_size(n);
    auto& out = found[idx];
    auto report = [&](std::string kind, VertexSet A, std::string detail) {
      out.push_back(Violation{n, k, std::move(kind), std::move(A), std::move(detail)});
    };
    if (cell.F.universe() != size || cell.Y.universe() != size || !(cell.F & cell.Y).empty() ||
        (cell.F | cell.Y).count() != size) {
      report("partition", VertexSet(size), "F and Y do not partition the block");
      return;
    }
    // (a)
    if (static_cast<double>(cell.Y.count()) + 1e-9 < (1.0 - E.alphas[k]) * static_cast<double>(size)) {
      report("size", cell.F, "|Y|=" + std::to_string(cell.Y.count()) + " below (1-alpha)|X|");
    }
    // (b)
    const auto sub = r_adjacency_subgraph(X, cell.Y, E.radii[k]);
    const int half = static_cast<int>(sub.graph.size() / 2);
    if (half >= 1) {
      SetSearchResult r;
      if (sub.graph.size() <= opts.exact_cap) {
        r = exact_min_ratio(sub.graph, 1, half);
      } else {
        heuristic[idx] = 1;
        SearchOptions o = opts;
        o.seed = mix_seed(opts.seed, idx, 0xb0);
        r = heuristic_min_ratio(sub.graph, 1, half, o);
      }
      bool bad;
      std::string claim;
      if (E.metric) {
        const Ratio half_c(E.thresholds[k].num(), 2 * E.thresholds[k].den());
        bad = half_c.admits(r.boundary, static_cast<std::int64_t>(r.set.count()));
        claim = half_c.to_string();
      } else {
        const double ratio = r.ratio().value();
        bad = E.strict_claim ? ratio <= E.c_guaranteed[k] + 1e-12 : ratio < E.c_guaranteed[k] - 1e-9;
        claim = format_double(E.c_guaranteed[k]);
      }
      if (r.found && bad) {
        VertexSet A(size);
        for (int v : r.set.to_vector()) A.insert(sub.to_parent[static_cast<std::size_t>(v)]);
        report("expansion", A,
               "ratio " + r.ratio().to_string() + " against claimed " + claim + (heuristic[idx] ? " (heuristic search)" : ""));
      }
    }
    // (c)
    if (E.maximal_sets && size <= opts.exact_cap) {
      if (auto A = lemma_counterexample(X, cell.F, E.thresholds[k], E.radii[k], E.strict_threshold)) {
        report("lemma", *A, "|d A \\ F| does not exceed " + E.thresholds[k].to_string() + "|A|");
      }
    } else if (E.maximal_sets) {
      heuristic[idx] = 1;
    }
  });
  VerificationReport rep;
  rep.cells_checked = K * B;
  for (std::size_t i = 0; i < K * B; ++i) {
    rep.heuristic_cells += heuristic[i] ? 1 : 0;
    for (auto& v : found[i]) rep.violations.push_back(std::move(v));
  }
  return rep;
}

Exhaustion nest_exhaustion(const Family& family, const Exhaustion& E, const SearchOptions& opts) {
  const std::size_t K = E.levels(), B = family.block_count();
  if (E.cells.size() != K || E.blocks() != B) throw PreconditionError("nest_exhaustion: shape mismatch");
  Exhaustion out = E;
  out.maximal_sets = false;
  out.strict_claim = false;
  out.diagnostics.clear();
  for (std::size_t n = 0; n < B; ++n) {
    VertexSet acc(family.block_size(n));
    for (std::size_t k = 0; k < K; ++k) {
      acc |= E.cells[k][n].Y;
      out.cells[k][n].Y = acc;
      out.cells[k][n].F = acc.complement();
    }
  }
  parallel_for(K * B, [&](std::size_t idx) {
    const std::size_t k = idx / B, n = idx % B;
    auto& cell = out.cells[k][n];
    if (cell.Y == E.cells[k][n].Y) return;
    const auto m = measure(family.block(n), cell.Y, out.radii[k], opts, idx);
    cell.measured = m.h;
    cell.connected = m.connected;
    cell.mode = m.mode;
  });
  out.c_guaranteed.assign(K, 0.0);
  out.c_measured.assign(K, std::nullopt);
  out.modes.assign(K, Mode::exact);
  for (std::size_t k = 0; k < K; ++k) {
    std::optional<std::size_t> worst;
    for (std::size_t n = 0; n < B; ++n) {
      const auto& cell = out.cells[k][n];
      if (cell.mode == Mode::heuristic) out.modes[k] = Mode::heuristic;
      if (cell.measured && (!out.c_measured[k] || cell.measured->value() < *out.c_measured[k])) {
        out.c_measured[k] = cell.measured->value();
        worst = n;
      }
    }
    if (out.c_measured[k] && *out.c_measured[k] <= 0.0) {
      throw CertificationError(*worst, k, "nested level has Cheeger constant 0");
    }
    out.c_guaranteed[k] = out.c_measured[k].value_or(0.0);
  }
  return out;
}

std::vector<Violation> converse_check(const Family& family, const Exhaustion& E, std::span<const double> alphas,
                                      ModeRequest mode, const SearchOptions& opts) {
  if (E.metric) throw PreconditionError("converse_check: graph exhaustions only");
  const std::size_t B = family.block_count();
  std::vector<Violation> out;
  std::vector<double> grid(alphas.begin(), alphas.end());
  std::vector<ExpansionProfile> profiles(B);
  parallel_for(B, [&](std::size_t n) { profiles[n] = expansion_profile(family.block(n), grid, 1.0, mode, opts); });
  const double D = std::max(1, E.max_degree);
  for (double a : grid) {
    for (std::size_t k = 0; k < E.levels(); ++k) {
      if (!E.c_measured[k]) continue;
      bool large = true;
      for (std::size_t n = 0; n < B && large; ++n) {
        large = static_cast<double>(E.cells[k][n].Y.count()) > (1.0 - a / 2.0) * static_cast<double>(family.block_size(n));
      }
      if (!large) continue;
      // A heuristic c_measured is an upper bound; the guaranteed constant is a lower one.
      const double ck = E.modes[k] == Mode::exact ? *E.c_measured[k] : E.c_guaranteed[k];
      if (!(ck > 0.0)) continue;
      const double bound = std::min(ck / 2.0, ck / D * (1.0 - a));
      for (std::size_t n = 0; n < B; ++n) {
        const auto& pe = profiles[n].at(a);
        if (pe.value && pe.value->value() < bound - 1e-9) {
          out.push_back(Violation{n, k, "converse", pe.witness,
                                  "profile " + pe.value->to_string() + " below " + format_double(bound) +
                                      " at alpha=" + format_double(a)});
        }
      }
    }
  }
  return out;
}

}  // namespace asymex
