// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <string>

#include "asymex/errors.hpp"
#include "asymex/generators.hpp"
#include "asymex/io.hpp"
#include "oracles.hpp"

using namespace asymex;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_graph(text, "g.txt");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("graph text round trip") {
    for (const Graph& g : {cycle_graph(6), dumbbell(3, 2), hypercube_graph(3), path_graph(1)}) {
      const std::string text = format_graph(g);
      CHECK(parse_graph(text).edges() == g.edges());
      CHECK(parse_graph(text).size() == g.size());
    }
    CHECK(format_graph(path_graph(3)) == "n 3\ne 0 1\ne 1 2\n");
    const Graph g = parse_graph("\nn 4\r\n\ne 2 3\n  e 0 1  \n");
    CHECK(g.size() == 4);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(parse_graph("n 0\n").size() == 0);
  }

  TEST_CASE("graph parse errors name the line") {
    CHECK(parse_error("") == "g.txt: missing 'n <N>' header");
    CHECK(parse_error("e 0 1\n") == "g.txt:1: first line must be 'n <N>'");
    CHECK(parse_error("n 3\ne 0 1\ne 0 1\n") == "g.txt:3: duplicate edge");
    CHECK(parse_error("n 3\ne 1 0\n") == "g.txt:2: edge needs 0 <= u < v < n");
    CHECK(parse_error("n 3\ne 0 3\n") == "g.txt:2: edge needs 0 <= u < v < n");
    CHECK(parse_error("n 3\n\ne 0 x\n") == "g.txt:3: expected an integer, got 'x'");
    CHECK(parse_error("n 3\nedge 0 1\n") == "g.txt:2: expected 'e <u> <v>'");
    CHECK(parse_error("n -2\n") == "g.txt:1: negative vertex count");
    CHECK(parse_error("n 2.5\n") == "g.txt:1: expected an integer, got '2.5'");
  }

  TEST_CASE("manifests") {
    Manifest m;
    m.label = "cycles";
    m.graphs = {{6, "graphs/c6.txt"}, {8, "graphs/c8.txt"}};
    const Manifest back = parse_manifest(format_manifest(m));
    CHECK(back.label == "cycles");
    REQUIRE(back.graphs.size() == 2);
    CHECK(back.graphs[1].index == 8);
    CHECK(back.graphs[1].path == "graphs/c8.txt");

    CHECK_THROWS_AS(parse_manifest("{"), ParseError);
    CHECK_THROWS_AS(parse_manifest("[]"), ParseError);
    CHECK_THROWS_AS(parse_manifest("{\"label\": \"x\"}"), ParseError);
    CHECK_THROWS_AS(parse_manifest("{\"graphs\": [{\"index\": \"six\", \"path\": \"a\"}]}"), ParseError);
    CHECK(parse_manifest("{\"graphs\": []}").graphs.empty());
  }

  TEST_CASE("families load relative to the manifest") {
    const auto dir = oracle::scratch("io-family");
    write_graph_file(dir / "graphs" / "c6.txt", cycle_graph(6));
    write_graph_file(dir / "graphs" / "k4.txt", complete_graph(4));
    Manifest m;
    m.label = "mixed";
    m.graphs = {{6, "graphs/c6.txt"}, {4, "graphs/k4.txt"}};
    write_text_file(dir / "manifest.json", format_manifest(m));
    const auto fam = load_family(dir / "manifest.json");
    CHECK(fam.label == "mixed");
    CHECK(fam.indices == std::vector<int>{6, 4});
    CHECK(fam.graphs[0].edges() == cycle_graph(6).edges());
    CHECK(fam.graphs[1].size() == 4);

    m.graphs.push_back({9, "graphs/missing.txt"});
    write_text_file(dir / "bad.json", format_manifest(m));
    CHECK_THROWS_AS(load_family(dir / "bad.json"), ParseError);
    write_text_file(dir / "empty.json", "{\"graphs\": []}");
    CHECK_THROWS_AS(load_family(dir / "empty.json"), ParseError);
    CHECK_THROWS_AS(read_text_file(dir / "nope.txt"), ParseError);
  }
}
