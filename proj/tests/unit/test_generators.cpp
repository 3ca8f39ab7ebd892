// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "asymex/errors.hpp"
#include "asymex/expansion.hpp"
#include "asymex/family.hpp"
#include "asymex/generators.hpp"
#include "asymex/spectral.hpp"
#include "oracles.hpp"

using namespace asymex;

namespace {

bool regular(const Graph& g, int d) {
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("random regular expanders") {
    const Graph g = random_regular_expander(8, 3, 1);
    CHECK(g.size() == 8);
    CHECK(regular(g, 3));
    CHECK(g.connected());
    CHECK(spectral_gap(g) >= 0.15);
    CHECK(random_regular_expander(8, 3, 1).edges() == g.edges());

    for (std::size_t n : {10u, 16u, 30u}) {
      const Graph h = random_regular_expander(n, 4, 7);
      CHECK(regular(h, 4));
      CHECK(spectral_gap(h) >= 0.2);
    }
    const Graph k4 = random_regular_expander(4, 3, 9);
    CHECK(k4.edges() == complete_graph(4).edges());
    CHECK(spectral_gap(k4) == doctest::Approx(4.0));
    CHECK_THROWS_AS(random_regular_expander(5, 3, 1), PreconditionError);
    CHECK_THROWS_AS(random_regular_expander(3, 3, 1), PreconditionError);
    CHECK_THROWS_AS(random_regular_expander(12, 3, 1, 100.0, 3), GenerationError);
  }

  TEST_CASE("perturbed graphs") {
    const Edge join[] = {{0, 0}, {3, 2}};
    const Graph X = perturbed(cycle_graph(6), path_graph(4), join);
    CHECK(X.size() == 10);
    CHECK(X.edges().size() == 6 + 3 + 2);
    CHECK(X.has_edge(0, 6));
    CHECK(X.has_edge(3, 8));
    const Edge bad[] = {{0, 9}};
    CHECK_THROWS_AS(perturbed(cycle_graph(6), path_graph(4), bad), PreconditionError);
    CHECK_THROWS_AS(perturbed(cycle_graph(6), path_graph(4), std::span<const Edge>{}), PreconditionError);
  }

  TEST_CASE("girth splice") {
    const Graph X = girth_splice(cycle_graph(8), cycle_graph(6), {0, 1}, {0, 1});
    CHECK(X.size() == 14);
    CHECK(girth(X) == 14);
    CHECK(regular(X, 2));
    const Graph Y = random_regular_expander(12, 3, 4);
    const Graph Z = random_regular_expander(10, 3, 5);
    const auto ey = Y.edges()[3], ez = Z.edges()[2];
    const Graph S = girth_splice(Y, Z, ey, ez);
    CHECK(regular(S, 3));
    CHECK(S.edges().size() == Y.edges().size() + Z.edges().size());
    CHECK_THROWS_AS(girth_splice(cycle_graph(8), cycle_graph(6), {0, 2}, {0, 1}), PreconditionError);
  }

  TEST_CASE("towers") {
    CHECK(default_tower_schedule(4, 1) == 16);
    CHECK(default_tower_schedule(4, 3) == 2);
    CHECK(default_tower_schedule(5, 2) == 7);
    const Tower t = tower(4, default_tower_schedule, 3, 1);
    CHECK(t.requested == std::vector<std::size_t>{16, 4, 2, 1});
    CHECK(t.level_sizes == std::vector<std::size_t>{16, 4, 2, 1});
    CHECK(t.level_starts == std::vector<std::size_t>{0, 16, 20, 22});
    CHECK(t.graph.size() == 23);
    CHECK(t.graph.connected());
    CHECK(t.graph.has_edge(0, 16));
    CHECK(t.graph.has_edge(20, 22));

    const Tower odd = tower(5, default_tower_schedule, 3, 1);
    CHECK(odd.requested[1] == 7);
    CHECK(odd.level_sizes[1] == 8);
    CHECK_THROWS_AS(tower(3, [](int, int k) { return static_cast<std::size_t>(k); }, 3, 1), PreconditionError);
    CHECK_THROWS_AS(tower(3, default_tower_schedule, 2, 1), PreconditionError);
  }

  TEST_CASE("tower schedule conditions") {
    const int ns[] = {4, 8, 16, 32};
    const auto c = check_tower_schedule(default_tower_schedule, ns, 0.1, 0.5);
    REQUIRE(c.kbar_tail);
    REQUIRE(c.kbar_ratio);
    // Tail sums decay like 1/kbar against a total near (pi^2/6) n^2.
    for (int n : ns) {
      if (n < *c.kbar_tail) continue;
      double all = 0, tail = 0;
      for (int i = 1; i <= n; ++i) {
        all += static_cast<double>(default_tower_schedule(n, i));
        if (i >= *c.kbar_tail) tail += static_cast<double>(default_tower_schedule(n, i));
      }
      CHECK(tail < 0.1 * all);
    }
    const auto flat = check_tower_schedule([](int, int) { return std::size_t{5}; }, ns, 0.1, 0.01);
    CHECK(!flat.kbar_ratio);
  }

  TEST_CASE("string quotients") {
    for (int n : {8, 16, 32}) {
      const auto sq = string_quotient(n, 3, 2);
      CHECK(sq.block_len == ceil_log2(static_cast<std::size_t>(n)));
      CHECK(sq.base_size == static_cast<std::size_t>(n) * sq.block_len + (sq.parity_adjusted ? 1 : 0));
      CHECK(sq.X.size() == sq.base_size + static_cast<std::size_t>(n));
      CHECK(sq.Y.size() == 2 * static_cast<std::size_t>(n));
      CHECK(sq.X.connected());
      CHECK(sq.Y.connected());
      CHECK(sq.path.size() == static_cast<std::size_t>(n));
      CHECK(sq.X.has_edge(0, sq.path.back()));
      // The far half of the path in Y: |Y|/4 vertices, one boundary vertex.
      const std::size_t q = sq.Y.size() / 4;
      VertexSet A(sq.Y.size());
      for (std::size_t i = 0; i < q; ++i) A.insert(n + static_cast<int>(i));
      CHECK(boundary_ratio(sq.Y, A).value() <= 4.0 / static_cast<double>(sq.Y.size()) + 1e-12);
      // pi is 1-Lipschitz with preimages of at most one block.
      const auto defect = weak_embedding_defect({sq.X}, {sq.pi}, {sq.Y}, 0);
      CHECK(defect[0].lipschitz <= 1);
      CHECK(defect[0].worst_preimage <= sq.block_len + 1);
    }
    const auto a = string_quotient(16, 3, 5), b = string_quotient(16, 3, 5);
    CHECK(a.X.edges() == b.X.edges());
    CHECK(a.pi == b.pi);
    CHECK_THROWS_AS(string_quotient(1, 3, 1), PreconditionError);
  }

  TEST_CASE("dumbbells") {
    for (std::size_t b : {0u, 1u, 3u}) {
      const Graph g = dumbbell(4, b);
      CHECK(g.size() == 8 + b);
      CHECK(g.connected());
      CHECK(g.edges().size() == 12 + b + 1);
    }
    CHECK(cheeger_exact(dumbbell(4, 0)).h == Ratio(1, 4));
    CHECK_THROWS_AS(dumbbell(1, 0), PreconditionError);
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(8) == 3);
    CHECK(ceil_log2(9) == 4);
  }

  TEST_CASE("random connected graphs") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Graph g = random_connected_graph(3 + s % 12, 0.2, s);
      CHECK(g.connected());
      CHECK(g.edges() == random_connected_graph(3 + s % 12, 0.2, s).edges());
    }
    CHECK(random_connected_graph(6, 1.0, 1).edges().size() == 15);
    CHECK(random_connected_graph(6, 0.0, 1).edges().size() == 5);
  }

  TEST_CASE("family generation") {
    GenSpec spec;
    spec.kind = "perturbed";
    spec.ns = {6, 12, 20};
    const auto fam = generate(spec);
    REQUIRE(fam.members.size() == 3);
    CHECK(fam.classification == Classification::asymptotic_only);
    CHECK(fam.label == "perturbed-d3-seed1");
    CHECK(fam.members[0].graph.size() == 6 + 3);
    CHECK(fam.members[1].graph.size() == 12 + 4);
    CHECK(fam.members[2].graph.size() == 20 + 5);
    CHECK(fam.max_degree == 4);
    CHECK(generate(spec).members[2].graph.edges() == fam.members[2].graph.edges());

    spec.kind = "random_regular";
    spec.ns = {5, 8};
    const auto rr = generate(spec);
    CHECK(rr.classification == Classification::expander);
    CHECK(rr.members[0].graph.size() == 6);
    CHECK(rr.members[0].notes.size() == 1);

    spec.kind = "dumbbell";
    spec.ns = {4};
    CHECK(generate(spec).members[0].graph.size() == 12);
    spec.bridge_len = 0;
    CHECK(generate(spec).members[0].graph.size() == 8);
    CHECK(to_string(generate(spec).classification) == "negative-control");

    spec = GenSpec{};
    spec.kind = "string_quotient";
    spec.ns = {8};
    const auto sq = generate(spec);
    CHECK(sq.members[0].quotient.has_value());
    CHECK(sq.members[0].quotient_map.size() == sq.members[0].graph.size());

    spec.kind = "nope";
    CHECK_THROWS_AS(generate(spec), PreconditionError);
    spec.kind = "tower";
    spec.ns = {4, 3};
    CHECK_THROWS_AS(generate(spec), PreconditionError);
    spec.ns = {};
    CHECK_THROWS_AS(generate(spec), PreconditionError);
    spec.ns = {4};
    spec.d = 2;
    CHECK_THROWS_AS(generate(spec), PreconditionError);
  }
}
