// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "asymex/errors.hpp"
#include "asymex/suites.hpp"

using namespace asymex;

TEST_SUITE("suites") {
  TEST_CASE("every suite passes on a small corpus") {
    SuiteOptions o;
    o.count = 24;
    o.seed = 3;
    for (const auto& name : suite_names()) {
      const auto r = run_suite(name, o);
      CHECK_MESSAGE(r.passed(), name);
      CHECK(r.name == name);
      CHECK(r.cases > 0);
      CHECK(r.checks > 0);
      CHECK(r.failures.empty());
    }
    CHECK_THROWS_AS(run_suite("nope", o), PreconditionError);
  }

  TEST_CASE("suites are pure functions of their options") {
    SuiteOptions o;
    o.count = 16;
    o.seed = 5;
    const auto a = run_suite("lemma3", o), b = run_suite("lemma3", o);
    CHECK(a.checks == b.checks);
    CHECK(a.notes == b.notes);
    o.seed = 6;
    CHECK(run_suite("lemma3", o).checks != a.checks);
  }

  TEST_CASE("random corpus") {
    const auto c = random_corpus(30, 4, 5, 9);
    REQUIRE(c.size() == 30);
    for (const auto& g : c) {
      CHECK(g.connected());
      CHECK(g.size() >= 5);
      CHECK(g.size() <= 9);
    }
    CHECK(random_corpus(30, 4, 5, 9)[7].edges() == c[7].edges());
  }

  TEST_CASE("transitive suite notes") {
    const auto r = run_suite("transitive", {});
    bool violated = false;
    for (const auto& n : r.notes) violated |= n.find("hypothesis violated") != std::string::npos;
    CHECK(violated);
  }
}
