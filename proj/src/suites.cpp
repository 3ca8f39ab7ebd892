// SPDX-License-Identifier: Apache-2.0
#include "asymex/suites.hpp"

#include <cmath>

#include "asymex/decompose.hpp"
#include "asymex/errors.hpp"
#include "asymex/expansion.hpp"
#include "asymex/family.hpp"
#include "asymex/format.hpp"
#include "asymex/generators.hpp"
#include "asymex/homogeneity.hpp"
#include "asymex/operators.hpp"
#include "asymex/parallel.hpp"
#include "asymex/rng.hpp"
#include "asymex/spectral.hpp"

namespace asymex {

namespace {

constexpr std::size_t kMaxFailures = 8;

struct Tally {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++violations;
    if (failures.size() < kMaxFailures) failures.push_back(what);
  }
};

SuiteResult collect(std::string name, std::size_t cases, const std::vector<Tally>& parts) {
  SuiteResult r;
  r.name = std::move(name);
  r.cases = cases;
  for (const auto& t : parts) {
    r.checks += t.checks;
    r.violations += t.violations;
    for (const auto& f : t.failures) {
      if (r.failures.size() < kMaxFailures) r.failures.push_back(f);
    }
  }
  return r;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (int v : s.to_vector()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::vector<Ratio> tenth_grid() {
  std::vector<Ratio> cs;
  for (int k = 1; k <= 10; ++k) cs.emplace_back(k, 10);
  return cs;
}

}  // namespace

std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed, std::size_t lo, std::size_t hi) {
  if (lo == 0 || hi < lo) throw PreconditionError("random_corpus: need 1 <= lo <= hi");
  std::vector<Graph> out;
  out.reserve(count);
  SplitMix64 rng(mix_seed(seed, lo, hi));
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
    const double p = 0.1 + 0.4 * rng.unit();
    out.push_back(random_connected_graph(n, p, mix_seed(seed, i, 0x6c)));
  }
  return out;
}

SuiteResult lemma_suite(const SuiteOptions& opts) {
  const auto corpus = random_corpus(opts.count, opts.seed, 6, 14);
  const auto cs = tenth_grid();
  std::vector<Tally> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    const Space X{g};
    for (const auto& c : cs) {
      for (const auto& F : all_maximal_folner_sets(g, Threshold{c, false}, opts.exact_cap)) {
        const auto A = lemma_counterexample(X, F, c);
        parts[i].check(!A, "graph " + std::to_string(i) + " c=" + c.to_string() + " F=" + set_text(F) +
                               (A ? " A=" + set_text(*A) : ""));
      }
    }
  });
  return collect("lemma3", corpus.size(), parts);
}

SuiteResult corollary_suite(const SuiteOptions& opts) {
  const auto corpus = random_corpus(opts.count, opts.seed, 6, 14);
  const auto cs = tenth_grid();
  std::vector<Tally> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    for (const auto& c : cs) {
      for (const auto& F : all_maximal_folner_sets(g, Threshold{c, false}, opts.exact_cap)) {
        const auto A = corollary_counterexample(g, F, c);
        parts[i].check(!A, "graph " + std::to_string(i) + " c=" + c.to_string() + " F=" + set_text(F) +
                               (A ? " A=" + set_text(*A) : ""));
      }
    }
  });
  return collect("corollary", corpus.size(), parts);
}

SuiteResult spectral_suite(const SuiteOptions& opts) {
  const auto corpus = random_corpus(std::max<std::size_t>(1, opts.count / 2), opts.seed ^ 0x5eULL, 3, 12);
  std::vector<Tally> parts(corpus.size() + 1);
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    const double lambda2 = spectral_gap(g);
    PoincareOptions po;
    po.seed = mix_seed(opts.seed, i, 0x2);
    const auto est = poincare_constant(g, 2.0, PoincareMethod::subgradient_descent, po);
    parts[i].check(est.value >= lambda2 - 1e-9 && est.value - lambda2 <= 1e-6,
                   "graph " + std::to_string(i) + ": descent " + format_double(est.value) + " vs lambda2 " +
                       format_double(lambda2));
  });
  for (std::size_t m = 2; m <= 30; ++m) {
    const double gap = spectral_gap(complete_graph(m));
    parts.back().check(std::abs(gap - static_cast<double>(m)) <= 1e-9,
                       "K_" + std::to_string(m) + " gap " + format_double(gap));
  }
  return collect("spectral", corpus.size() + 29, parts);
}

SuiteResult operator_suite(const SuiteOptions& opts) {
  const std::size_t trials = std::max<std::size_t>(1, opts.count * 5 / 2);
  std::vector<Tally> parts(2 * trials);
  parallel_for(trials, [&](std::size_t t) {
    SplitMix64 rng(mix_seed(opts.seed, t, 0x0b));
    std::vector<Graph> blocks;
    const std::size_t B = 1 + rng.below(4);
    for (std::size_t b = 0; b < B; ++b) blocks.push_back(path_graph(1 + rng.below(12)));
    const Family fam = graph_family(blocks);
    const auto P = averaging_projection(fam);
    VertexSet A(fam.total_size()), Bs(fam.total_size());
    for (std::size_t x = 0; x < fam.total_size(); ++x) {
      if (rng.coin()) A.insert(static_cast<int>(x));
      if (rng.coin()) Bs.insert(static_cast<int>(x));
    }
    const double closed = cut_norm(P, A, Bs), iter = cut_norm_generic(P, A, Bs);
    parts[t].check(std::abs(closed - iter) <= 1e-10,
                   "pair " + std::to_string(t) + ": closed " + format_double(closed) + " vs iterative " +
                       format_double(iter));

    SplitMix64 r2(mix_seed(opts.seed, t, 0x0c));
    const std::size_t nb = 1 + r2.below(3);
    std::vector<std::size_t> sizes;
    std::vector<std::vector<double>> mats;
    for (std::size_t b = 0; b < nb; ++b) {
      const std::size_t m = 1 + r2.below(10);
      sizes.push_back(m);
      std::vector<double> a(m * m);
      for (auto& x : a) x = 2.0 * r2.unit() - 1.0;
      mats.push_back(std::move(a));
    }
    const BlockOperator T(sizes, mats);
    const double op = operator_norm(T), fro = frobenius_norm(T);
    parts[trials + t].check(op <= fro * (1.0 + 1e-12) + 1e-12, "operator " + std::to_string(t) + ": norm " +
                                                                   format_double(op) + " > Frobenius " +
                                                                   format_double(fro));
  });
  return collect("operator", 2 * trials, parts);
}

SuiteResult boundary_suite(const SuiteOptions& opts) {
  const auto corpus = random_corpus(std::max<std::size_t>(1, opts.count / 4), opts.seed ^ 0xb0ULL, 4, 10);
  std::vector<Tally> parts(corpus.size());
  std::vector<std::size_t> literal_failures(corpus.size(), 0);
  parallel_for(corpus.size(), [&](std::size_t i) {
    const Graph& g = corpus[i];
    const auto nb = exact::neighbor_masks(g);
    const std::size_t n = g.size();
    const exact::Mask total = exact::Mask{1} << n;
    std::vector<exact::Mask> bd(total, 0), cover(total, 0);
    for (exact::Mask s = 1; s < total; ++s) {
      const int low = std::countr_zero(s);
      cover[s] = cover[s & (s - 1)] | nb[static_cast<std::size_t>(low)];
      bd[s] = cover[s] & ~s;
    }
    auto pc = [](exact::Mask m) { return static_cast<std::size_t>(std::popcount(m)); };
    std::size_t bad_union = 0, bad_bound = 0, bad_sub = 0, literal = 0, sampled_bad = 0;
    for (exact::Mask a = 0; a < total; ++a) {
      for (exact::Mask b = 0; b < total; ++b) {
        const std::size_t u = pc(bd[a | b]), in = pc(bd[a & b]);
        const std::size_t dA = pc(bd[a]), dB = pc(bd[b]), dAdB = pc(bd[a] & bd[b]), AdB = pc(a & bd[b]),
                          dAB = pc(bd[a] & b);
        if (u + dAdB + AdB + dAB != dA + dB) ++bad_union;
        if (in > AdB + dAB + dAdB) ++bad_bound;
        if (in != AdB + dAB + dAdB) ++literal;
        if (u + in > dA + dB) ++bad_sub;
        if ((a * 31 + b) % 997 == 0) {
          const auto bc = boundary_counts(g, VertexSet::from_mask(n, a), VertexSet::from_mask(n, b));
          if (bc.union_boundary != u || bc.intersection_boundary != in || bc.dA != dA || bc.dB != dB ||
              bc.dA_dB != dAdB || bc.A_dB != AdB || bc.dA_B != dAB) {
            ++sampled_bad;
          }
        }
      }
    }
    const std::string tag = "graph " + std::to_string(i) + ": ";
    parts[i].check(bad_union == 0, tag + std::to_string(bad_union) + " pairs break the union identity");
    parts[i].check(bad_bound == 0, tag + std::to_string(bad_bound) + " pairs break the intersection bound");
    parts[i].check(bad_sub == 0, tag + std::to_string(bad_sub) + " pairs break submodularity");
    parts[i].check(sampled_bad == 0, tag + "boundary_counts disagrees with mask arithmetic");
    literal_failures[i] = literal;
  });
  auto r = collect("boundary", corpus.size(), parts);
  std::size_t literal = 0, graphs = 0;
  for (auto x : literal_failures) {
    literal += x;
    graphs += x > 0;
  }
  r.notes.push_back("intersection identity holds as an inequality only; equality fails for " + std::to_string(literal) +
                    " pairs on " + std::to_string(graphs) + " graphs");
  return r;
}

SuiteResult dichotomy_suite(const SuiteOptions& opts) {
  const auto corpus = random_corpus(std::max<std::size_t>(1, opts.count * 3 / 2), opts.seed ^ 0xd1ULL, 2, 12);
  std::vector<Tally> parts(corpus.size());
  std::vector<int> branch(corpus.size(), 0);
  parallel_for(corpus.size(), [&](std::size_t i) {
    const auto d = cheeger_dichotomy(corpus[i], opts.exact_cap);
    const std::size_t n = corpus[i].size();
    bool ok = d.branch != DichotomyBranch::violated;
    if (d.branch == DichotomyBranch::large_witness) ok = ok && 4 * d.witness.count() > n;
    if (d.branch == DichotomyBranch::unique_maximal) ok = ok && d.maximal.size() == 1;
    ok = ok && boundary_ratio(corpus[i], d.witness) == d.h;
    parts[i].check(ok, "graph " + std::to_string(i) + ": branch " + to_string(d.branch));
    branch[i] = static_cast<int>(d.branch);
  });
  auto r = collect("dichotomy", corpus.size(), parts);
  std::size_t large = 0, unique = 0;
  for (int b : branch) {
    large += b == static_cast<int>(DichotomyBranch::large_witness);
    unique += b == static_cast<int>(DichotomyBranch::unique_maximal);
  }
  r.notes.push_back(std::to_string(large) + " large-witness, " + std::to_string(unique) + " unique-maximal");
  return r;
}

SuiteResult transitive_suite(const SuiteOptions& opts) {
  Tally t;
  std::vector<Graph> cycles, cubes;
  for (std::size_t m = 6; m <= 20; m += 2) cycles.push_back(cycle_graph(m));
  for (std::size_t k = 2; k <= 4; ++k) cubes.push_back(hypercube_graph(k));
  const auto rc = transitive_equivalence_check(cycles, {}, opts.exact_cap);
  t.check(rc.status == TransitiveStatus::consistent, "cycles: " + rc.verdict);
  const auto rq = transitive_equivalence_check(cubes, {}, opts.exact_cap);
  t.check(rq.status == TransitiveStatus::consistent, "hypercubes: " + rq.verdict);
  GenSpec spec;
  spec.kind = "perturbed";
  spec.ns = {6, 12};
  spec.seed = opts.seed;
  const auto rp = transitive_equivalence_check(generate(spec).graphs(), {}, opts.exact_cap);
  t.check(rp.status == TransitiveStatus::hypothesis_violated, "perturbed: " + rp.verdict);
  auto r = collect("transitive", cycles.size() + cubes.size() + 2, {t});
  r.notes = {"cycles: " + rc.verdict, "hypercubes: " + rq.verdict, "perturbed: " + rp.verdict};
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma3",   "corollary", "spectral",  "operator",
                                              "boundary", "dichotomy", "transitive"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "lemma3") return lemma_suite(opts);
  if (name == "corollary") return corollary_suite(opts);
  if (name == "spectral") return spectral_suite(opts);
  if (name == "operator") return operator_suite(opts);
  if (name == "boundary") return boundary_suite(opts);
  if (name == "dichotomy") return dichotomy_suite(opts);
  if (name == "transitive") return transitive_suite(opts);
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace asymex
