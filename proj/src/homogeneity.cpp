// SPDX-License-Identifier: Apache-2.0
#include "asymex/homogeneity.hpp"

#include <algorithm>

#include "asymex/errors.hpp"
#include "asymex/metric.hpp"
#include "asymex/parallel.hpp"

namespace asymex {

std::string to_string(DichotomyBranch b) {
  switch (b) {
    case DichotomyBranch::large_witness: return "large-witness";
    case DichotomyBranch::unique_maximal: return "unique-maximal";
    case DichotomyBranch::violated: return "violated";
  }
  return "unknown";
}

std::string to_string(TransitiveStatus s) {
  switch (s) {
    case TransitiveStatus::consistent: return "consistent";
    case TransitiveStatus::hypothesis_violated: return "hypothesis violated";
    case TransitiveStatus::inconclusive: return "inconclusive";
    case TransitiveStatus::inconsistent: return "inconsistent";
  }
  return "unknown";
}

DichotomyReport cheeger_dichotomy(const Graph& g, std::size_t cap) {
  if (!g.connected()) throw PreconditionError("cheeger_dichotomy: graph must be connected");
  const auto res = cheeger_exact(g, cap, 0);
  DichotomyReport rep;
  rep.h = res.h;
  rep.maximal = res.maximal_witnesses;
  rep.minimiser_count = res.minimiser_count;
  const std::size_t n = g.size();
  for (const auto& m : rep.maximal) {
    if (4 * m.count() > n && (rep.witness.universe() == 0 || m.count() > rep.witness.count())) {
      rep.witness = m;
      rep.branch = DichotomyBranch::large_witness;
    }
  }
  if (rep.branch != DichotomyBranch::large_witness && rep.maximal.size() == 1) {
    rep.branch = DichotomyBranch::unique_maximal;
    rep.witness = rep.maximal.front();
  }
  return rep;
}

BoundaryCounts boundary_counts(const Graph& g, const VertexSet& A, const VertexSet& B) {
  const Space s{g};
  const auto dA = r_boundary(s, A, 1.0), dB = r_boundary(s, B, 1.0);
  BoundaryCounts c;
  c.union_boundary = r_boundary(s, A | B, 1.0).count();
  c.intersection_boundary = r_boundary(s, A & B, 1.0).count();
  c.dA = dA.count();
  c.dB = dB.count();
  c.dA_dB = (dA & dB).count();
  c.A_dB = (A & dB).count();
  c.dA_B = (dA & B).count();
  return c;
}

bool is_automorphism(const Graph& g, const std::vector<int>& p) {
  const std::size_t n = g.size();
  if (p.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (auto [u, v] : g.edges()) {
    if (!g.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

namespace {

std::size_t orbit_of_zero(std::size_t n, const std::vector<std::vector<int>>& gens) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& p : gens) {
      const int w = p[static_cast<std::size_t>(v)];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

TransitiveReport transitive_equivalence_check(const std::vector<Graph>& family,
                                              const std::vector<std::vector<std::vector<int>>>& hints,
                                              std::size_t cap) {
  if (family.empty()) throw PreconditionError("transitive_equivalence_check: empty family");
  if (!hints.empty() && hints.size() != family.size()) {
    throw PreconditionError("transitive_equivalence_check: hints must be empty or one list per graph");
  }
  TransitiveReport rep;
  rep.blocks.resize(family.size());
  const double quarter[] = {0.25};
  parallel_for(family.size(), [&](std::size_t n) {
    const Graph& g = family[n];
    auto& b = rep.blocks[n];
    b.source = "none";
    const auto& mine = hints.empty() ? std::vector<std::vector<int>>{} : hints[n];
    for (const auto& p : mine) {
      if (!is_automorphism(g, p)) throw PreconditionError("hint for block " + std::to_string(n) + " is not an automorphism");
    }
    // A group acting transitively fixes no proper nonempty set, so the maximal Cheeger set cannot be unique.
    if (!mine.empty() && g.size() > 1 && orbit_of_zero(g.size(), mine) == g.size()) {
      b.established = true;
      b.multiple_maximal = true;
      b.source = "automorphism hint";
    }
    if (g.size() > cap) return;
    const auto d = cheeger_dichotomy(g, cap);
    b.h = d.h;
    if (b.established && d.maximal.size() < 2) throw InvariantViolation("transitive hints but a unique maximal Cheeger set");
    b.established = true;
    b.multiple_maximal = d.maximal.size() >= 2;
    if (b.source == "none") b.source = "enumeration";
    b.profile_quarter = expansion_profile(Space{g}, quarter, 1.0, ModeRequest::exact, SearchOptions{cap}).entries[0].value;
  });
  bool all_flags = true, undecided = false, unmeasured = false;
  std::size_t failing = 0;
  for (std::size_t n = 0; n < rep.blocks.size(); ++n) {
    const auto& b = rep.blocks[n];
    if (!b.established) {
      undecided = true;
      continue;
    }
    unmeasured = unmeasured || !b.h;
    if (!b.multiple_maximal && all_flags) failing = n;
    all_flags = all_flags && b.multiple_maximal;
    if (b.profile_quarter && (!rep.c_quarter || *b.profile_quarter < *rep.c_quarter)) rep.c_quarter = b.profile_quarter;
  }
  if (!all_flags) {
    rep.status = TransitiveStatus::hypothesis_violated;
    rep.verdict = "hypothesis violated: block " + std::to_string(failing) + " has a unique maximal Cheeger set";
    return rep;
  }
  if (undecided || unmeasured) {
    rep.status = TransitiveStatus::inconclusive;
    rep.verdict = undecided ? "inconclusive: some blocks exceed the exact cap without transitive hints"
                            : "inconclusive: flags hold but some blocks exceed the exact cap for h";
    return rep;
  }
  if (!rep.c_quarter || !(*rep.c_quarter > Ratio(0, 1))) {
    rep.status = TransitiveStatus::consistent;
    rep.verdict = "consistent: c(1/4) = 0 over range; no lower bound on h implied";
    return rep;
  }
  for (std::size_t n = 0; n < rep.blocks.size(); ++n) {
    if (*rep.blocks[n].h < *rep.c_quarter) {
      rep.status = TransitiveStatus::inconsistent;
      rep.verdict = "inconsistent: h of block " + std::to_string(n) + " is " + rep.blocks[n].h->to_string() +
                    " below c(1/4) = " + rep.c_quarter->to_string();
      return rep;
    }
  }
  rep.status = TransitiveStatus::consistent;
  rep.verdict = "consistent: h_n >= c(1/4) = " + rep.c_quarter->to_string() + " on every block";
  return rep;
}

}  // namespace asymex
