// SPDX-License-Identifier: Apache-2.0
#include "asymex/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "asymex/errors.hpp"
#include "asymex/format.hpp"
#include "asymex/parallel.hpp"
#include "asymex/rng.hpp"
#include "asymex/spectral.hpp"

namespace asymex {

using exact::Mask;

std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "heuristic-upper-bound"; }

ModeRequest parse_mode_request(const std::string& s) {
  if (s == "exact") return ModeRequest::exact;
  if (s == "heuristic") return ModeRequest::heuristic;
  if (s == "auto" || s == "automatic") return ModeRequest::automatic;
  throw PreconditionError("unknown mode '" + s + "' (expected exact, heuristic or auto)");
}

Mode resolve_mode(ModeRequest req, std::size_t n, std::size_t cap) {
  if (cap > exact::kMaxCap) throw PreconditionError("exact-size cap above " + std::to_string(exact::kMaxCap));
  switch (req) {
    case ModeRequest::exact:
      if (n > cap) throw CapExceeded(n, cap);
      return Mode::exact;
    case ModeRequest::heuristic: return Mode::heuristic;
    case ModeRequest::automatic: return n <= cap ? Mode::exact : Mode::heuristic;
  }
  return Mode::heuristic;
}

Ratio boundary_ratio(const Graph& g, const VertexSet& A) {
  if (A.universe() != g.size()) throw PreconditionError("boundary_ratio: vertex set universe mismatch");
  const auto size = A.count();
  if (size == 0) throw PreconditionError("boundary_ratio: empty set");
  const auto b = r_boundary(Space{g}, A, 1.0).count();
  return Ratio(static_cast<std::int64_t>(b), static_cast<std::int64_t>(size));
}

namespace {

bool ratio_less(std::int64_t b1, std::int64_t s1, std::int64_t b2, std::int64_t s2) { return b1 * s2 < b2 * s1; }

struct SizeMinima {
  std::vector<int> boundary;  // -1: no set of that size
  std::vector<Mask> witness;
};

SizeMinima size_minima(const Graph& g, int max_size) {
  if (g.size() > exact::kMaxCap) throw CapExceeded(g.size(), exact::kMaxCap);
  const auto nb = exact::neighbor_masks(g);
  const auto all = exact::all_vertices(g.size());
  SizeMinima sm;
  sm.boundary.assign(static_cast<std::size_t>(max_size) + 1, -1);
  sm.witness.assign(static_cast<std::size_t>(max_size) + 1, 0);
  exact::for_each_subset(all, nb, max_size, [&](Mask s, Mask cover, int size) {
    if (size == 0) return;
    const int b = exact::popcount(cover & ~s);
    auto& cur = sm.boundary[static_cast<std::size_t>(size)];
    if (cur < 0 || b < cur) {
      cur = b;
      sm.witness[static_cast<std::size_t>(size)] = s;
    }
  });
  return sm;
}

SetSearchResult best_in_range(const SizeMinima& sm, std::size_t n, int lo, int hi) {
  SetSearchResult r;
  Mask best = 0;
  int best_size = 0;
  for (int s = std::max(lo, 1); s <= hi && s < static_cast<int>(sm.boundary.size()); ++s) {
    const int b = sm.boundary[static_cast<std::size_t>(s)];
    if (b < 0) continue;
    const Mask w = sm.witness[static_cast<std::size_t>(s)];
    if (!r.found || ratio_less(b, s, r.boundary, best_size) ||
        (!ratio_less(r.boundary, best_size, b, s) && exact::lex_less(w, best))) {
      r.found = true;
      r.boundary = b;
      best = w;
      best_size = s;
    }
  }
  if (r.found) r.set = exact::to_set(n, best);
  return r;
}

// ---- heuristic search -------------------------------------------------------

class SetState {
 public:
  explicit SetState(const Graph& g) : g_(&g), in_(g.size(), 0), cnt_(g.size(), 0) {}

  int size() const { return size_; }
  int boundary() const { return boundary_; }
  bool contains(int v) const { return in_[static_cast<std::size_t>(v)] != 0; }
  bool on_boundary(int v) const { return !contains(v) && cnt_[static_cast<std::size_t>(v)] > 0; }

  void add(int v) {
    in_[static_cast<std::size_t>(v)] = 1;
    ++size_;
    if (cnt_[static_cast<std::size_t>(v)] > 0) --boundary_;
    for (int w : g_->neighbors(v)) {
      if (cnt_[static_cast<std::size_t>(w)]++ == 0 && !in_[static_cast<std::size_t>(w)]) ++boundary_;
    }
  }

  void remove(int v) {
    in_[static_cast<std::size_t>(v)] = 0;
    --size_;
    if (cnt_[static_cast<std::size_t>(v)] > 0) ++boundary_;
    for (int w : g_->neighbors(v)) {
      if (--cnt_[static_cast<std::size_t>(w)] == 0 && !in_[static_cast<std::size_t>(w)]) --boundary_;
    }
  }

  int delta_add(int v) const {
    int d = cnt_[static_cast<std::size_t>(v)] > 0 ? -1 : 0;
    for (int w : g_->neighbors(v)) {
      if (!in_[static_cast<std::size_t>(w)] && cnt_[static_cast<std::size_t>(w)] == 0) ++d;
    }
    return d;
  }

  int delta_remove(int v) const {
    int d = cnt_[static_cast<std::size_t>(v)] > 0 ? 1 : 0;
    for (int w : g_->neighbors(v)) {
      if (!in_[static_cast<std::size_t>(w)] && cnt_[static_cast<std::size_t>(w)] == 1) --d;
    }
    return d;
  }

  void clear() {
    std::fill(in_.begin(), in_.end(), 0);
    std::fill(cnt_.begin(), cnt_.end(), 0);
    size_ = boundary_ = 0;
  }

  void assign(const std::vector<int>& members) {
    clear();
    for (int v : members) add(v);
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < in_.size(); ++v) {
      if (in_[v]) out.push_back(static_cast<int>(v));
    }
    return out;
  }

 private:
  const Graph* g_;
  std::vector<char> in_;
  std::vector<int> cnt_;
  int size_ = 0;
  int boundary_ = 0;
};

struct Candidate {
  std::vector<int> members;
  int boundary = 0;
};

bool candidate_better(const Candidate& a, const Candidate& b) {
  const auto sa = static_cast<std::int64_t>(a.members.size());
  const auto sb = static_cast<std::int64_t>(b.members.size());
  if (ratio_less(a.boundary, sa, b.boundary, sb)) return true;
  if (ratio_less(b.boundary, sb, a.boundary, sa)) return false;
  return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end());
}

/// Best prefix of `order` with size in [lo, hi].
Candidate best_prefix(const Graph& g, const std::vector<int>& order, int lo, int hi, SetState& st) {
  st.clear();
  Candidate best;
  int best_size = 0;
  for (int k = 0; k < hi && k < static_cast<int>(order.size()); ++k) {
    st.add(order[static_cast<std::size_t>(k)]);
    if (st.size() >= lo && (best_size == 0 || ratio_less(st.boundary(), st.size(), best.boundary, best_size))) {
      best.boundary = st.boundary();
      best_size = st.size();
    }
  }
  best.members.assign(order.begin(), order.begin() + best_size);
  std::sort(best.members.begin(), best.members.end());
  (void)g;
  return best;
}

/// BFS order from `start`, continuing with the lowest unvisited vertex when a component is exhausted.
std::vector<int> bfs_order(const Graph& g, int start) {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> order;
  order.reserve(g.size());
  auto run = [&](int s) {
    std::size_t head = order.size();
    seen[static_cast<std::size_t>(s)] = 1;
    order.push_back(s);
    for (; head < order.size(); ++head) {
      for (int w : g.neighbors(order[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
      }
    }
  };
  run(start);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!seen[v]) run(static_cast<int>(v));
  }
  return order;
}

void local_search(const Graph& g, SetState& st, int lo, int hi, std::size_t budget, SplitMix64& rng, Candidate& best) {
  const int n = static_cast<int>(g.size());
  auto record = [&] {
    if (st.size() < lo || st.size() > hi) return;
    Candidate c{st.members(), st.boundary()};
    if (best.members.empty() || candidate_better(c, best)) best = std::move(c);
  };
  record();
  std::size_t kicks = 0;
  for (std::size_t step = 0; step < budget; ++step) {
    // Best single move by resulting ratio; ties go to the lowest vertex id.
    int best_v = -1;
    bool best_is_add = false;
    std::int64_t nb = 0, ns = 0;
    auto consider = [&](int v, bool is_add, int delta) {
      const std::int64_t b = st.boundary() + delta;
      const std::int64_t s = st.size() + (is_add ? 1 : -1);
      if (best_v < 0 || ratio_less(b, s, nb, ns)) {
        best_v = v;
        best_is_add = is_add;
        nb = b;
        ns = s;
      }
    };
    for (int v = 0; v < n; ++v) {
      if (st.contains(v)) {
        if (st.size() > lo) consider(v, false, st.delta_remove(v));
      } else if (st.size() < hi) {
        consider(v, true, st.delta_add(v));
      }
    }
    if (best_v >= 0 && ratio_less(nb, ns, st.boundary(), st.size())) {
      if (best_is_add) st.add(best_v);
      else st.remove(best_v);
      record();
      continue;
    }
    // Swaps among the most promising candidates on each side.
    std::vector<std::pair<int, int>> adds, rems;
    for (int v = 0; v < n; ++v) {
      if (st.on_boundary(v)) adds.emplace_back(st.delta_add(v), v);
      else if (st.contains(v)) rems.emplace_back(st.delta_remove(v), v);
    }
    std::sort(adds.begin(), adds.end());
    std::sort(rems.begin(), rems.end());
    adds.resize(std::min<std::size_t>(adds.size(), 6));
    rems.resize(std::min<std::size_t>(rems.size(), 6));
    int swap_b = st.boundary();
    int swap_in = -1, swap_out = -1;
    for (auto [da, a] : adds) {
      st.add(a);
      for (auto [dr, r] : rems) {
        st.remove(r);
        if (st.boundary() < swap_b) {
          swap_b = st.boundary();
          swap_in = a;
          swap_out = r;
        }
        st.add(r);
      }
      st.remove(a);
    }
    if (swap_in >= 0) {
      st.add(swap_in);
      st.remove(swap_out);
      record();
      continue;
    }
    if (kicks * 8 >= budget) break;
    ++kicks;
    const int moves = 1 + static_cast<int>(rng.below(3));
    for (int m = 0; m < moves; ++m) {
      const auto members = st.members();
      std::vector<int> frontier;
      for (int v = 0; v < n; ++v) {
        if (st.on_boundary(v)) frontier.push_back(v);
      }
      const bool grow = (rng.coin() || st.size() <= lo) && st.size() < hi && !frontier.empty();
      if (grow) {
        st.add(frontier[static_cast<std::size_t>(rng.below(frontier.size()))]);
      } else if (st.size() > lo && !members.empty()) {
        st.remove(members[static_cast<std::size_t>(rng.below(members.size()))]);
      }
    }
    record();
  }
}

}  // namespace

SetSearchResult exact_min_ratio(const Graph& g, int lo, int hi) {
  hi = std::min(hi, static_cast<int>(g.size()));
  if (lo > hi || hi < 1) return {};
  return best_in_range(size_minima(g, hi), g.size(), lo, hi);
}

SetSearchResult heuristic_min_ratio(const Graph& g, int lo, int hi, const SearchOptions& opts) {
  const int n = static_cast<int>(g.size());
  hi = std::min(hi, n);
  lo = std::max(lo, 1);
  if (lo > hi) return {};
  SetState st(g);
  std::vector<Candidate> seeds;
  std::vector<std::vector<int>> orders;
  const auto fv = fiedler_vector(g);
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return fv[static_cast<std::size_t>(a)] < fv[static_cast<std::size_t>(b)]; });
  orders.push_back(order);
  std::reverse(order.begin(), order.end());
  orders.push_back(order);
  std::vector<int> starts{order.back(), order.front(), 0};
  int min_deg = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(min_deg)) min_deg = v;
  }
  starts.push_back(min_deg);
  SplitMix64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
  for (int s = 0; s < opts.starts; ++s) starts.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
  for (int s : starts) orders.push_back(bfs_order(g, s));
  for (const auto& o : orders) seeds.push_back(best_prefix(g, o, lo, hi, st));
  std::sort(seeds.begin(), seeds.end(), candidate_better);
  seeds.erase(std::unique(seeds.begin(), seeds.end(),
                          [](const Candidate& a, const Candidate& b) { return a.members == b.members; }),
              seeds.end());
  Candidate best = seeds.front();
  const std::size_t runs = std::min<std::size_t>(seeds.size(), static_cast<std::size_t>(std::max(1, opts.starts)));
  for (std::size_t i = 0; i < runs; ++i) {
    st.assign(seeds[i].members);
    local_search(g, st, lo, hi, opts.budget, rng, best);
  }
  SetSearchResult r;
  r.found = true;
  r.boundary = best.boundary;
  r.set = VertexSet::from_list(g.size(), best.members);
  return r;
}

CheegerResult cheeger_exact(const Graph& g, std::size_t cap, std::size_t witness_limit) {
  const std::size_t n = g.size();
  if (n < 2) throw PreconditionError("cheeger constant needs at least 2 vertices");
  if (cap > exact::kMaxCap) throw PreconditionError("exact-size cap above " + std::to_string(exact::kMaxCap));
  if (n > cap) throw CapExceeded(n, cap);
  const int hi = static_cast<int>(n / 2);
  const auto best = best_in_range(size_minima(g, hi), n, 1, hi);
  CheegerResult res;
  res.h = best.ratio();
  const auto nb = exact::neighbor_masks(g);
  const auto all = exact::all_vertices(n);
  std::vector<Mask> minimisers;
  exact::SubsetBitmap bitmap(static_cast<int>(n));
  const std::int64_t num = res.h.num(), den = res.h.den();
  exact::for_each_subset(all, nb, hi, [&](Mask s, Mask cover, int size) {
    if (size == 0) return;
    if (static_cast<std::int64_t>(exact::popcount(cover & ~s)) * den == num * size) {
      minimisers.push_back(s);
      bitmap.set(s);
    }
  });
  for (std::size_t i = 0; i < minimisers.size() && i < witness_limit; ++i) res.witnesses.push_back(exact::to_set(n, minimisers[i]));
  res.minimiser_count = minimisers.size();
  res.witnesses_truncated = minimisers.size() > witness_limit;
  bitmap.close_upward_supersets();
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask m : minimisers) {
    if (exact::is_maximal(bitmap, m, full)) res.maximal_witnesses.push_back(exact::to_set(n, m));
  }
  return res;
}

CheegerResult cheeger_heuristic(const Graph& g, const SearchOptions& opts) {
  if (g.size() < 2) throw PreconditionError("cheeger constant needs at least 2 vertices");
  const auto r = heuristic_min_ratio(g, 1, static_cast<int>(g.size() / 2), opts);
  CheegerResult res;
  res.exact = false;
  res.h = r.ratio();
  res.witnesses.push_back(r.set);
  res.maximal_witnesses.push_back(r.set);
  res.minimiser_count = 1;
  return res;
}

const ProfileEntry& ExpansionProfile::at(double alpha) const {
  for (const auto& e : entries) {
    if (std::abs(e.alpha - alpha) <= 1e-12) return e;
  }
  throw PreconditionError("profile has no entry for alpha = " + format_double(alpha));
}

int profile_lower_size(double alpha, std::size_t n) {
  return std::max(1, static_cast<int>(std::ceil(alpha * static_cast<double>(n) - 1e-9)));
}

namespace {

void check_grid(std::span<const double> grid) {
  for (double a : grid) {
    if (!(a > 0.0 && a <= 0.5)) throw PreconditionError("alpha grid values must lie in (0, 1/2], got " + format_double(a));
  }
}

}  // namespace

ExpansionProfile expansion_profile(const Space& space, std::span<const double> grid, double R, ModeRequest mode,
                                   const SearchOptions& opts) {
  check_grid(grid);
  const std::size_t n = space_size(space);
  const Mode m = resolve_mode(mode, n, opts.exact_cap);
  const Graph adj = r_adjacency_graph(space, R);
  const int hi = static_cast<int>(n / 2);
  std::vector<double> alphas(grid.begin(), grid.end());
  std::sort(alphas.begin(), alphas.end());
  ExpansionProfile prof;
  prof.R = R;
  std::optional<SizeMinima> sm;
  if (m == Mode::exact && hi >= 1) sm = size_minima(adj, hi);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    ProfileEntry e;
    e.alpha = alphas[i];
    e.mode = m;
    const int lo = profile_lower_size(alphas[i], n);
    SetSearchResult r;
    if (lo <= hi) {
      if (m == Mode::exact) {
        r = best_in_range(*sm, n, lo, hi);
      } else {
        SearchOptions o = opts;
        o.seed = mix_seed(opts.seed, static_cast<std::uint64_t>(lo), 0x9f);
        r = heuristic_min_ratio(adj, lo, hi, o);
      }
    }
    if (r.found) {
      e.value = r.ratio();
      e.witness = r.set;
    } else {
      e.witness = VertexSet(n);
    }
    prof.entries.push_back(std::move(e));
  }
  if (m == Mode::heuristic) {
    // A witness for a larger alpha is admissible for every smaller one.
    for (std::size_t i = prof.entries.size(); i-- > 1;) {
      auto& lower = prof.entries[i - 1];
      const auto& upper = prof.entries[i];
      if (upper.value && (!lower.value || *upper.value < *lower.value)) {
        lower.value = upper.value;
        lower.witness = upper.witness;
      }
    }
  }
  return prof;
}

namespace {

FolnerCertificate certificate_for(const Graph& adj, const Threshold& t, const VertexSet& F, Mode m) {
  FolnerCertificate c;
  c.threshold = t;
  c.F = F;
  c.mode = m;
  if (!F.empty()) {
    const auto b = r_boundary(Space{adj}, F, 1.0).count();
    c.ratio = Ratio(static_cast<std::int64_t>(b), static_cast<std::int64_t>(F.count()));
  }
  return c;
}

VertexSet exact_maximal(const Graph& adj, const Threshold& t) {
  const std::size_t n = adj.size();
  const int hi = static_cast<int>(n / 2);
  const auto nb = exact::neighbor_masks(adj);
  const auto all = exact::all_vertices(n);
  exact::SubsetBitmap bitmap(static_cast<int>(n));
  exact::for_each_subset(all, nb, hi, [&](Mask s, Mask cover, int size) {
    if (size == 0 || t.admits(exact::popcount(cover & ~s), size)) bitmap.set(s);
  });
  bitmap.close_upward_supersets();
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask found = 0;
  exact::for_each_subset(all, nb, hi, [&](Mask s, Mask cover, int size) -> bool {
    if (size == 0 || t.admits(exact::popcount(cover & ~s), size)) {
      if (exact::is_maximal(bitmap, s, full)) {
        found = s;
        return false;
      }
    }
    return true;
  });
  return exact::to_set(n, found);
}

VertexSet heuristic_maximal(const Graph& adj, const Threshold& t, const SearchOptions& opts) {
  const int n = static_cast<int>(adj.size());
  const int hi = n / 2;
  SetState st(adj);
  if (hi < 1) return VertexSet(adj.size());
  // Largest admitted start found by searching size windows [k, hi], k descending.
  for (int k = hi; k >= 1; k = (k == 1 ? 0 : std::max(1, k * 3 / 4))) {
    SearchOptions o = opts;
    o.seed = mix_seed(opts.seed, static_cast<std::uint64_t>(k), 0x3c);
    const auto r = heuristic_min_ratio(adj, k, hi, o);
    if (r.found && t.admits(r.boundary, static_cast<std::int64_t>(r.set.count()))) {
      st.assign(r.set.to_vector());
      break;
    }
  }
  if (st.size() == 0) return VertexSet(adj.size());
  SplitMix64 rng(mix_seed(opts.seed, 0x77, static_cast<std::uint64_t>(n)));
  for (int round = 0; round < 4 * n; ++round) {
    bool grew = false;
    // Greedy: the admitted single addition with the smallest boundary.
    int best_v = -1, best_b = 0;
    for (int v = 0; v < n && st.size() < hi; ++v) {
      if (st.contains(v)) continue;
      const int b = st.boundary() + st.delta_add(v);
      if (t.admits(b, st.size() + 1) && (best_v < 0 || b < best_b)) {
        best_v = v;
        best_b = b;
      }
    }
    if (best_v >= 0) {
      st.add(best_v);
      continue;
    }
    // Superset probes: balls around frontier vertices, then random frontier chunks.
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
      if (st.on_boundary(v)) frontier.push_back(v);
    }
    std::vector<std::vector<int>> probes;
    for (int f : frontier) {
      for (int r = 1; r <= 2; ++r) {
        VertexSet src(adj.size());
        src.insert(f);
        const auto d = multi_source_bfs(adj, src, r);
        std::vector<int> ball;
        for (int v = 0; v < n; ++v) {
          if (d[static_cast<std::size_t>(v)] <= r && !st.contains(v)) ball.push_back(v);
        }
        probes.push_back(std::move(ball));
      }
    }
    for (int p = 0; p < opts.starts && !frontier.empty(); ++p) {
      std::vector<int> chunk;
      const int len = 2 + static_cast<int>(rng.below(4));
      for (int j = 0; j < len; ++j) chunk.push_back(frontier[static_cast<std::size_t>(rng.below(frontier.size()))]);
      std::sort(chunk.begin(), chunk.end());
      chunk.erase(std::unique(chunk.begin(), chunk.end()), chunk.end());
      probes.push_back(std::move(chunk));
    }
    for (const auto& probe : probes) {
      if (probe.empty() || st.size() + static_cast<int>(probe.size()) > hi) continue;
      for (int v : probe) st.add(v);
      if (t.admits(st.boundary(), st.size())) {
        grew = true;
        break;
      }
      for (int v : probe) st.remove(v);
    }
    if (!grew) break;
  }
  return VertexSet::from_list(adj.size(), st.members());
}

}  // namespace

FolnerCertificate maximal_folner(const Space& space, const Threshold& threshold, double R, ModeRequest mode,
                                 const SearchOptions& opts) {
  if (!(threshold.c > Ratio(0, 1))) throw PreconditionError("maximal_folner: c must be positive");
  const std::size_t n = space_size(space);
  const Mode m = resolve_mode(mode, n, opts.exact_cap);
  const Graph adj = r_adjacency_graph(space, R);
  const VertexSet F = m == Mode::exact ? exact_maximal(adj, threshold) : heuristic_maximal(adj, threshold, opts);
  return certificate_for(adj, threshold, F, m);
}

FolnerCertificate maximal_folner(const Graph& g, const Ratio& c, ModeRequest mode, const SearchOptions& opts) {
  return maximal_folner(Space{g}, Threshold{c, false}, 1.0, mode, opts);
}

std::vector<VertexSet> all_maximal_folner_sets(const Graph& g, const Threshold& t, std::size_t cap) {
  const std::size_t n = g.size();
  if (cap > exact::kMaxCap) throw PreconditionError("exact-size cap above " + std::to_string(exact::kMaxCap));
  if (n > cap) throw CapExceeded(n, cap);
  const int hi = static_cast<int>(n / 2);
  const auto nb = exact::neighbor_masks(g);
  const auto all = exact::all_vertices(n);
  exact::SubsetBitmap bitmap(static_cast<int>(n));
  std::vector<Mask> admitted;
  exact::for_each_subset(all, nb, hi, [&](Mask s, Mask cover, int size) {
    if (size == 0 || t.admits(exact::popcount(cover & ~s), size)) {
      bitmap.set(s);
      admitted.push_back(s);
    }
  });
  bitmap.close_upward_supersets();
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<VertexSet> out;
  for (Mask s : admitted) {
    if (exact::is_maximal(bitmap, s, full)) out.push_back(exact::to_set(n, s));
  }
  return out;
}

const CertificateEntry& FamilyCertificate::at(double alpha) const {
  for (const auto& e : entries) {
    if (std::abs(e.alpha - alpha) <= 1e-12) return e;
  }
  throw PreconditionError("certificate has no entry for alpha = " + format_double(alpha));
}

FamilyCertificate family_certificate(const Family& family, std::span<const double> grid, std::span<const double> radii,
                                     ModeRequest mode, const SearchOptions& opts) {
  check_grid(grid);
  if (family.block_count() == 0) throw PreconditionError("family_certificate: empty family");
  if (!radii.empty() && radii.size() != 1 && radii.size() != grid.size()) {
    throw PreconditionError("family_certificate: need one radius or one per grid point");
  }
  std::vector<std::pair<double, double>> points;  // (alpha, R)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double R = radii.empty() ? 1.0 : radii.size() == 1 ? radii[0] : radii[i];
    points.emplace_back(grid[i], R);
  }
  std::sort(points.begin(), points.end());
  std::map<double, std::vector<double>> by_radius;
  for (auto [a, R] : points) by_radius[R].push_back(a);

  const std::size_t B = family.block_count();
  std::vector<std::vector<ExpansionProfile>> per_block(B);
  parallel_for(B, [&](std::size_t b) {
    SearchOptions o = opts;
    o.seed = mix_seed(opts.seed, b, 0xce);
    for (const auto& [R, alphas] : by_radius) per_block[b].push_back(expansion_profile(family.block(b), alphas, R, mode, o));
  });

  FamilyCertificate cert;
  for (auto [a, R] : points) {
    CertificateEntry e;
    e.alpha = a;
    e.R = R;
    const auto ri = static_cast<std::size_t>(std::distance(by_radius.begin(), by_radius.find(R)));
    for (std::size_t b = 0; b < B; ++b) {
      const ProfileEntry& pe = per_block[b][ri].at(a);
      e.per_block.push_back(pe);
      if (pe.mode == Mode::heuristic) e.mode = Mode::heuristic;
      if (pe.value && (!e.value || *pe.value < *e.value)) {
        e.value = pe.value;
        e.argmin_block = b;
      }
    }
    cert.entries.push_back(std::move(e));
  }

  std::optional<double> decay_alpha;
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& e : cert.entries) {
    std::vector<double> vals;
    for (const auto& pe : e.per_block) {
      if (pe.value) vals.push_back(pe.value->value());
    }
    if (e.value) lowest = std::min(lowest, e.value->value());
    if (vals.size() < 2) continue;
    const double last = vals.back();
    const double top = *std::max_element(vals.begin(), vals.end());
    const bool decays = last <= 0.5 * top && std::all_of(vals.begin(), vals.end() - 1, [&](double v) { return last <= v; });
    if (decays) decay_alpha = e.alpha;
  }
  if (decay_alpha) {
    cert.verdict = "profile decays at α=" + format_double(*decay_alpha) + "; not asymptotic-expanding over range";
  } else {
    cert.verdict = "profile bounded below by " + format_double(lowest) + " over range; consistent with asymptotic expansion";
  }
  return cert;
}

}  // namespace asymex
