// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <atomic>
#include <set>

#include "asymex/errors.hpp"
#include "asymex/format.hpp"
#include "asymex/parallel.hpp"
#include "asymex/ratio.hpp"
#include "asymex/rng.hpp"
#include "asymex/vertex_set.hpp"

using namespace asymex;

TEST_SUITE("core") {
  TEST_CASE("ratio normalises and orders exactly") {
    CHECK(Ratio(4, 6) == Ratio(2, 3));
    CHECK(Ratio(2, 3).to_string() == "2/3");
    CHECK(Ratio(6, 3).to_string() == "2");
    CHECK(Ratio(1, 3) < Ratio(1, 2));
    CHECK(Ratio(0, 5) == Ratio(0, 1));
    CHECK_THROWS_AS(Ratio(1, 0), PreconditionError);
    CHECK_THROWS_AS(Ratio(-1, 2), PreconditionError);
  }

  TEST_CASE("ratio parse accepts fractions, integers and decimals") {
    CHECK(Ratio::parse("3/9") == Ratio(1, 3));
    CHECK(Ratio::parse("7") == Ratio(7, 1));
    CHECK(Ratio::parse("0.4") == Ratio(2, 5));
    CHECK(Ratio::parse("0.125") == Ratio(1, 8));
    CHECK_THROWS_AS(Ratio::parse("x"), ParseError);
    CHECK_THROWS_AS(Ratio::parse(""), ParseError);
    CHECK_THROWS_AS(Ratio::parse("1/0"), ParseError);
  }

  TEST_CASE("ratio admission is exact at the threshold") {
    const Ratio c(2, 5);
    CHECK(c.admits(2, 5));
    CHECK_FALSE(c.strictly_admits(2, 5));
    CHECK(c.strictly_admits(1, 5));
    CHECK_FALSE(c.admits(3, 5));
    CHECK(Ratio::from_double(0.75) == Ratio(3, 4));
  }

  TEST_CASE("vertex set algebra") {
    const std::vector<int> a{0, 2, 5}, b{2, 3};
    const auto A = VertexSet::from_list(8, a), B = VertexSet::from_list(8, b);
    CHECK((A | B).to_vector() == std::vector<int>{0, 2, 3, 5});
    CHECK((A & B).to_vector() == std::vector<int>{2});
    CHECK((A - B).to_vector() == std::vector<int>{0, 5});
    CHECK(A.complement().count() == 5);
    CHECK((A & B).is_subset_of(A));
    CHECK(VertexSet::from_mask(8, A.to_mask()) == A);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK_FALSE(A.contains(9));
    const std::vector<int> bad{9};
    CHECK_THROWS(VertexSet::from_list(8, bad));
  }

  TEST_CASE("lexicographic order of sorted member lists") {
    const std::vector<int> x{0, 1}, y{0, 1, 2}, z{0, 2};
    const auto X = VertexSet::from_list(4, x), Y = VertexSet::from_list(4, y), Z = VertexSet::from_list(4, z);
    CHECK(lex_less(X, Y));
    CHECK(lex_less(Y, Z));
    CHECK_FALSE(lex_less(Z, X));
  }

  TEST_CASE("splitmix is reproducible and mix_seed separates streams") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 50; ++i) seeds.insert(mix_seed(7, i, 0));
    CHECK(seeds.size() == 50);
    CHECK(mix_seed(7, 1, 2) == mix_seed(7, 1, 2));
    SplitMix64 r(3);
    for (int i = 0; i < 1000; ++i) {
      CHECK(r.below(7) < 7);
      const double u = r.unit();
      CHECK((u >= 0.0 && u < 1.0));
    }
  }

  TEST_CASE("fixed float formatting") {
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0 / 0.0) == "inf");
    CHECK(round12(0.1 + 0.2) == 0.3);
  }

  TEST_CASE("parallel_for visits every index once and rethrows") {
    for (std::size_t t : {1, 3, 8}) {
      set_thread_count(t);
      std::vector<std::atomic<int>> hits(100);
      parallel_for(100, [&](std::size_t i) { hits[i]++; });
      for (auto& h : hits) CHECK(h.load() == 1);
      CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                        if (i == 4) throw PreconditionError("boom");
                      }),
                      PreconditionError);
    }
    set_thread_count(1);
  }
}
