// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "asymex/errors.hpp"
#include "asymex/generators.hpp"
#include "asymex/homogeneity.hpp"
#include "asymex/suites.hpp"
#include "oracles.hpp"

using namespace asymex;

namespace {

VertexSet set_of(std::size_t n, std::vector<int> v) { return VertexSet::from_list(n, v); }

std::vector<int> rotation(std::size_t n) {
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>((i + 1) % n);
  return p;
}

Graph clique_with_tail(std::size_t m, std::size_t tail) {
  const Edge join[] = {{0, 0}};
  return perturbed(complete_graph(m), path_graph(tail), join);
}

}  // namespace

TEST_SUITE("homogeneity") {
  TEST_CASE("dichotomy on named graphs") {
    // Two maximal Cheeger sets {0} and {2}, each larger than n/4.
    const auto p3 = cheeger_dichotomy(path_graph(3));
    CHECK(p3.h == Ratio(1, 1));
    CHECK(p3.maximal == std::vector<VertexSet>{set_of(3, {0}), set_of(3, {2})});
    CHECK(p3.branch == DichotomyBranch::large_witness);

    const auto c6 = cheeger_dichotomy(cycle_graph(6));
    CHECK(c6.h == Ratio(2, 3));
    CHECK(c6.minimiser_count == 6);
    CHECK(c6.maximal.size() == 6);
    CHECK(c6.branch == DichotomyBranch::large_witness);
    CHECK(c6.witness.count() == 3);

    const auto db = cheeger_dichotomy(dumbbell(4, 0));
    CHECK(db.h == Ratio(1, 4));
    CHECK(db.maximal.size() == 2);
    CHECK(db.branch == DichotomyBranch::large_witness);

    const auto star = cheeger_dichotomy(star_graph(3));
    CHECK(star.h == Ratio(1, 2));
    CHECK(star.maximal.size() == 3);
    for (const auto& m : star.maximal) CHECK(!m.contains(0));
    CHECK(star.branch == DichotomyBranch::large_witness);

    // The tail {10, 11} of K10 + P2 is the only Cheeger set, below n/4 = 3.
    const auto tail = cheeger_dichotomy(clique_with_tail(10, 2));
    CHECK(tail.h == Ratio(1, 2));
    CHECK(tail.maximal == std::vector<VertexSet>{set_of(12, {10, 11})});
    CHECK(tail.branch == DichotomyBranch::unique_maximal);
    CHECK(tail.witness == set_of(12, {10, 11}));
    CHECK(to_string(DichotomyBranch::unique_maximal) == "unique-maximal");
  }

  TEST_CASE("dichotomy agrees with brute force") {
    for (const auto& g : random_corpus(40, 8, 2, 12)) {
      const auto ref = oracle::cheeger(oracle::adjacency(g));
      const auto rep = cheeger_dichotomy(g);
      CHECK(rep.h == Ratio(ref.best.p, ref.best.q));
      CHECK(rep.minimiser_count == ref.minimisers.size());
      CHECK(rep.branch != DichotomyBranch::violated);
      for (const auto& m : rep.maximal) {
        bool maximal = true;
        for (auto s : ref.minimisers) {
          const auto S = VertexSet::from_mask(g.size(), s);
          if (m.is_subset_of(S) && !(S == m)) maximal = false;
        }
        CHECK(maximal);
      }
    }
    CHECK_THROWS_AS(cheeger_dichotomy(disjoint_union(std::vector<Graph>{path_graph(2), path_graph(2)})),
                    PreconditionError);
  }

  TEST_CASE("boundary counts") {
    const Graph g = path_graph(5);
    const auto c = boundary_counts(g, set_of(5, {0, 1}), set_of(5, {1, 2}));
    CHECK(c.union_boundary == 1);
    CHECK(c.intersection_boundary == 2);
    CHECK(c.dA == 1);
    CHECK(c.dB == 2);
    CHECK(c.union_identity());
    CHECK(c.submodular());
    CHECK(c.intersection_bound());

    const Graph k3 = complete_graph(3);
    const auto d = boundary_counts(k3, set_of(3, {0, 1}), set_of(3, {1, 2}));
    CHECK(d.intersection_boundary == 2);
    CHECK(d.A_dB + d.dA_B + d.dA_dB == 2);
    // Disjoint adjacent sets: d(A n B) is empty but both cross terms count.
    const auto e = boundary_counts(path_graph(2), set_of(2, {0}), set_of(2, {1}));
    CHECK(e.intersection_boundary == 0);
    CHECK(e.A_dB + e.dA_B + e.dA_dB == 2);
    CHECK(e.intersection_bound());
    CHECK(!e.intersection_equality());
  }

  TEST_CASE("automorphisms") {
    CHECK(is_automorphism(cycle_graph(6), rotation(6)));
    CHECK(is_automorphism(cycle_graph(6), {0, 5, 4, 3, 2, 1}));
    CHECK(!is_automorphism(path_graph(4), rotation(4)));
    CHECK(!is_automorphism(cycle_graph(4), {0, 0, 1, 2}));
    CHECK(!is_automorphism(cycle_graph(4), {0, 1, 2}));
    CHECK(is_automorphism(hypercube_graph(3), {1, 0, 3, 2, 5, 4, 7, 6}));
  }

  TEST_CASE("transitive equivalence check") {
    std::vector<Graph> cycles;
    std::vector<std::vector<std::vector<int>>> hints;
    for (std::size_t n = 6; n <= 12; n += 2) {
      cycles.push_back(cycle_graph(n));
      hints.push_back({rotation(n)});
    }
    const auto rep = transitive_equivalence_check(cycles, hints);
    CHECK(rep.status == TransitiveStatus::consistent);
    REQUIRE(rep.c_quarter);
    CHECK(*rep.c_quarter == Ratio(1, 3));
    for (const auto& b : rep.blocks) {
      CHECK(b.multiple_maximal);
      CHECK(*b.h >= *rep.c_quarter);
    }
    CHECK(rep.blocks[0].source == "automorphism hint");
    CHECK(transitive_equivalence_check(cycles).blocks[0].source == "enumeration");

    const std::vector<Graph> tails{clique_with_tail(6, 2), clique_with_tail(10, 2)};
    const auto bad = transitive_equivalence_check(tails);
    CHECK(bad.status == TransitiveStatus::hypothesis_violated);
    CHECK(to_string(bad.status) == "hypothesis violated");

    const auto big = transitive_equivalence_check({cycle_graph(30)}, {}, 22);
    CHECK(big.status == TransitiveStatus::inconclusive);
    const auto hinted = transitive_equivalence_check({cycle_graph(30)}, {{rotation(30)}}, 22);
    CHECK(hinted.blocks[0].established);
    CHECK_THROWS_AS(transitive_equivalence_check({path_graph(4)}, {{rotation(4)}}), PreconditionError);
  }
}
