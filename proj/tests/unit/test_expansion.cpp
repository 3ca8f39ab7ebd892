// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "asymex/errors.hpp"
#include "asymex/expansion.hpp"
#include "asymex/generators.hpp"
#include "asymex/rng.hpp"
#include "asymex/suites.hpp"
#include "oracles.hpp"

using namespace asymex;

namespace {

VertexSet set_of(std::size_t n, std::vector<int> v) { return VertexSet::from_list(n, v); }

Ratio to_ratio(const oracle::Fraction& f) { return Ratio(f.p, f.q); }

SearchOptions seeded(std::uint64_t s) {
  SearchOptions o;
  o.seed = s;
  return o;
}

}  // namespace

TEST_SUITE("expansion") {
  TEST_CASE("boundary ratios of small sets") {
    CHECK(boundary_ratio(complete_graph(2), set_of(2, {0})) == Ratio(1, 1));
    CHECK(boundary_ratio(cycle_graph(6), set_of(6, {0, 1, 2})) == Ratio(2, 3));
    CHECK(boundary_ratio(complete_graph(4), set_of(4, {0, 1})) == Ratio(1, 1));
    CHECK_THROWS_AS(boundary_ratio(complete_graph(4), VertexSet(4)), PreconditionError);
  }

  TEST_CASE("exact Cheeger constants of named graphs") {
    CHECK(cheeger_exact(complete_graph(2)).h == Ratio(1, 1));
    const auto c6 = cheeger_exact(cycle_graph(6));
    CHECK(c6.h == Ratio(2, 3));
    CHECK(c6.exact);
    CHECK(c6.minimiser_count == 6);
    for (const auto& w : c6.witnesses) {
      CHECK(w.count() == 3);
      CHECK(boundary_ratio(cycle_graph(6), w) == Ratio(2, 3));
    }
    const Graph db = dumbbell(4, 0);
    const auto d = cheeger_exact(db);
    CHECK(d.h == Ratio(1, 4));
    CHECK(d.maximal_witnesses.size() == 2);
    CHECK(d.witnesses.front().to_vector() == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("exact Cheeger constant agrees with brute force") {
    const auto corpus = random_corpus(60, 17, 2, 13);
    for (const auto& g : corpus) {
      const auto ref = oracle::cheeger(oracle::adjacency(g));
      const auto got = cheeger_exact(g);
      CHECK(got.h == to_ratio(ref.best));
      CHECK(got.minimiser_count == ref.minimisers.size());
      VertexSet first = VertexSet::from_mask(g.size(), ref.minimisers.front());
      for (auto m : ref.minimisers) {
        const auto s = VertexSet::from_mask(g.size(), m);
        if (lex_less(s, first)) first = s;
      }
      CHECK(got.witnesses.front() == first);
    }
  }

  TEST_CASE("exact enumeration respects the cap") {
    CHECK_THROWS_AS(cheeger_exact(cycle_graph(24), 22), CapExceeded);
    CHECK_THROWS_AS(resolve_mode(ModeRequest::exact, 30, 22), CapExceeded);
    CHECK(resolve_mode(ModeRequest::automatic, 30, 22) == Mode::heuristic);
    CHECK(resolve_mode(ModeRequest::automatic, 10, 22) == Mode::exact);
    CHECK(parse_mode_request("auto") == ModeRequest::automatic);
    CHECK_THROWS(parse_mode_request("sometimes"));
  }

  TEST_CASE("heuristic is an upper bound and usually exact") {
    const auto corpus = random_corpus(100, 23, 4, 16);
    int equal = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto ex = cheeger_exact(corpus[i]);
      const auto he = cheeger_heuristic(corpus[i], seeded(i));
      CHECK_FALSE(he.exact);
      CHECK(he.h >= ex.h);
      CHECK(boundary_ratio(corpus[i], he.witnesses.front()) == he.h);
      CHECK(2 * he.witnesses.front().count() <= corpus[i].size());
      equal += he.h == ex.h;
    }
    CHECK(equal >= 95);
  }

  TEST_CASE("heuristic closed forms on large cycles and cliques") {
    CHECK(cheeger_heuristic(cycle_graph(100), seeded(1)).h == Ratio(1, 25));
    CHECK(cheeger_heuristic(complete_graph(50), seeded(1)).h == Ratio(1, 1));
    for (std::size_t n = 3; n <= 22; ++n) CHECK(cheeger_exact(cycle_graph(n)).h == Ratio(2, static_cast<std::int64_t>(n / 2)));
  }

  TEST_CASE("expansion profile examples") {
    const double half[] = {0.5};
    CHECK(*expansion_profile(Space{dumbbell(4, 0)}, half).entries[0].value == Ratio(1, 4));
    CHECK(*expansion_profile(Space{cycle_graph(6)}, half, 2.0).entries[0].value == Ratio(1, 1));
    const Graph g = random_connected_graph(10, 0.3, 9);
    const double tiny[] = {0.1};
    CHECK(*expansion_profile(Space{g}, tiny).entries[0].value == cheeger_exact(g).h);
    const double too_big[] = {0.5};
    CHECK_FALSE(expansion_profile(Space{path_graph(1)}, too_big).entries[0].value.has_value());
  }

  TEST_CASE("profile agrees with brute force and is monotone") {
    const std::vector<double> grid{0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.5};
    const auto corpus = random_corpus(25, 29, 5, 14);
    for (const auto& g : corpus) {
      const auto p = expansion_profile(Space{g}, grid);
      const auto a = oracle::adjacency(g);
      std::optional<Ratio> prev;
      for (const auto& e : p.entries) {
        const auto ref = oracle::min_ratio(a, profile_lower_size(e.alpha, g.size()), static_cast<int>(g.size() / 2));
        REQUIRE(e.value.has_value() == ref.found);
        if (!ref.found) continue;
        CHECK(*e.value == to_ratio(ref.best));
        if (prev) CHECK(*prev <= *e.value);
        prev = e.value;
      }
    }
  }

  TEST_CASE("heuristic profile values bound the exact ones from above") {
    const std::vector<double> grid{0.1, 0.3, 0.5};
    const auto corpus = random_corpus(15, 31, 8, 16);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto ex = expansion_profile(Space{corpus[i]}, grid, 1.0, ModeRequest::exact);
      const auto he = expansion_profile(Space{corpus[i]}, grid, 1.0, ModeRequest::heuristic, seeded(i));
      for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(he.entries[k].mode == Mode::heuristic);
        CHECK(*he.entries[k].value >= *ex.entries[k].value);
        if (k > 0) CHECK(*he.entries[k - 1].value <= *he.entries[k].value);
      }
    }
  }

  TEST_CASE("maximal Folner sets") {
    CHECK(maximal_folner(cycle_graph(6), Ratio(2, 5)).F.empty());
    const std::vector<Edge> join{{0, 0}};
    const Graph k10p3 = perturbed(complete_graph(10), path_graph(3), join);
    const auto cert = maximal_folner(k10p3, Ratio(1, 2));
    CHECK(cert.F.to_vector() == std::vector<int>{10, 11, 12});
    CHECK(*cert.ratio == Ratio(1, 3));
    const Graph g = random_connected_graph(9, 0.3, 4);
    const auto big = maximal_folner(g, Ratio(g.max_degree(), 1));
    CHECK(big.F.to_vector() == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("exact maximal Folner sets are admitted and maximal") {
    const auto corpus = random_corpus(30, 37, 5, 12);
    for (const auto& g : corpus) {
      const auto a = oracle::adjacency(g);
      const std::size_t n = g.size();
      for (int k = 1; k <= 10; k += 3) {
        const Ratio c(k, 10);
        for (bool strict : {false, true}) {
          const Threshold t{c, strict};
          const auto cert = maximal_folner(Space{g}, t);
          const std::uint64_t f = cert.F.to_mask();
          auto admitted = [&](std::uint64_t s) {
            const int b = oracle::popcount(oracle::boundary(a, s)), sz = oracle::popcount(s);
            return 2 * sz <= static_cast<int>(n) && (strict ? b * c.den() < c.num() * sz : b * c.den() <= c.num() * sz);
          };
          CHECK((f == 0 || admitted(f)));
          for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            if ((s & f) == f && s != f && admitted(s)) FAIL("admitted strict superset");
          }
          for (const auto& m : all_maximal_folner_sets(g, t)) CHECK((m.empty() || admitted(m.to_mask())));
        }
      }
    }
  }

  TEST_CASE("family certificates") {
    std::vector<Graph> cliques;
    for (std::size_t n = 4; n <= 12; ++n) cliques.push_back(complete_graph(n));
    const double quarter[] = {0.25};
    const auto kc = family_certificate(graph_family(cliques), quarter);
    CHECK(*kc.entries[0].value == Ratio(1, 1));
    CHECK(kc.verdict.find("bounded below") != std::string::npos);
    CHECK(kc.scope == "finite-range certificate");

    std::vector<Graph> bells;
    for (std::size_t n = 3; n <= 11; ++n) bells.push_back(dumbbell(n, 0));
    const double half[] = {0.5};
    const auto dc = family_certificate(graph_family(bells), half);
    std::optional<Ratio> prev;
    for (const auto& pe : dc.entries[0].per_block) {
      CHECK(*pe.value == Ratio(1, static_cast<std::int64_t>(pe.witness.count())));
      if (prev) CHECK(*pe.value < *prev);
      prev = pe.value;
    }
    CHECK(*dc.entries[0].value == *prev);
    CHECK(dc.entries[0].argmin_block == bells.size() - 1);
    CHECK(dc.verdict == "profile decays at α=0.5; not asymptotic-expanding over range");

    const std::vector<double> grid{0.1, 0.3, 0.5};
    const Graph g = random_connected_graph(12, 0.25, 8);
    const auto single = family_certificate(graph_family({g}), grid);
    const auto prof = expansion_profile(Space{g}, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) CHECK(*single.entries[k].value == *prof.entries[k].value);
  }
}
