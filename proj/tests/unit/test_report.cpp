// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>

#include "asymex/errors.hpp"
#include "asymex/generators.hpp"
#include "asymex/report.hpp"

using namespace asymex;

namespace {

Exhaustion sample_exhaustion(const Family& fam) {
  const double alphas[] = {0.2, 0.1};
  return graph_exhaustion(fam, alphas, ModeRequest::exact);
}

Family sample_family() {
  GenSpec spec;
  spec.kind = "perturbed";
  spec.ns = {6, 12};
  return graph_family(generate(spec).graphs());
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("numbers") {
    CHECK(json_number(1.0 / 3.0).get<double>() == 0.333333333333);
    CHECK(json_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(json_number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(json_number(std::nan("")) == "nan");
    CHECK(std::isinf(json_to_double(Json("inf"))));
    CHECK(json_to_double(Json(0.25)) == 0.25);
    CHECK_THROWS_AS(json_to_double(Json("abc")), ParseError);
    CHECK(to_json(std::optional<Ratio>{}).dump() == R"({"value":"inf","exact":"inf"})");
    CHECK(to_json(Ratio(2, 3)).dump() == R"({"value":0.666666666667,"exact":"2/3"})");
  }

  TEST_CASE("exhaustion round trip") {
    const Family fam = sample_family();
    const std::vector<int> idx{6, 12};
    const auto E = sample_exhaustion(fam);
    const Json j = to_json(E, idx);
    CHECK(j["scope"] == "finite-range");
    CHECK(j["cells"].size() == 4);
    const Exhaustion back = exhaustion_from_json(parse_report(render_report(make_report("decompose", {}, j)))["results"],
                                                 fam.block_sizes());
    CHECK(to_json(back, idx) == j);
    CHECK(verify_exhaustion(fam, back).passed());

    Json missing = j;
    missing["cells"].erase(missing["cells"].size() - 1);
    CHECK_THROWS_AS(exhaustion_from_json(missing, fam.block_sizes()), ParseError);
    Json bad_vertex = j;
    bad_vertex["cells"][0]["F"] = Json::array({99});
    CHECK_THROWS_AS(exhaustion_from_json(bad_vertex, fam.block_sizes()), ParseError);
    Json short_levels = j;
    short_levels["radii"].erase(0);
    CHECK_THROWS_AS(exhaustion_from_json(short_levels, fam.block_sizes()), ParseError);
    CHECK_THROWS_AS(exhaustion_from_json(Json::object(), fam.block_sizes()), ParseError);
  }

  TEST_CASE("reports") {
    const Json r = make_report("analyze", Json{{"seed", 1}}, Json::array());
    const std::string text = render_report(r);
    CHECK(text.back() == '\n');
    CHECK(parse_report(text) == r);
    CHECK(r["schema"] == kReportSchema);
    CHECK_THROWS_AS(parse_report("{"), ParseError);
    CHECK_THROWS_AS(parse_report("{\"schema\": \"other/1\"}"), ParseError);
    CHECK_THROWS_AS(parse_report("[]"), ParseError);

    VerificationReport empty;
    const Json v = to_json(empty, {});
    CHECK(v["passed"] == true);
    CHECK(v["violations"].empty());
    PropagationProfile none;
    CHECK(propagation_csv(none) == "epsilon,R,found\n");
  }

  TEST_CASE("csv renderings") {
    const Graph c6 = cycle_graph(6);
    const double grid[] = {0.1, 0.5};
    const auto p = expansion_profile(c6, grid, 1.0, ModeRequest::exact);
    CHECK(profile_csv(p) == "alpha,value,mode,witness\n0.1,0.666666666667,exact,0 1 2\n0.5,0.666666666667,exact,0 1 2\n");
    CHECK(spectrum_csv({0.0, 1.5}) == "index,eigenvalue\n0,0\n1,1.5\n");
    CHECK(vertex_list(VertexSet::from_list(5, std::vector<int>{4, 1})) == "1 4");

    const double odd_grid[] = {0.5};
    const auto odd = expansion_profile(cycle_graph(5), odd_grid, 1.0, ModeRequest::exact);
    CHECK(profile_csv(odd) == "alpha,value,mode,witness\n0.5,inf,exact,\n");

    const Family fam = sample_family();
    const std::string csv = exhaustion_csv(sample_exhaustion(fam), {6, 12});
    CHECK(csv.rfind("n,k,alpha,|F|,|Y|,c_guaranteed,c_measured,mode\n6,0,0.2,", 0) == 0);
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == 5);
  }

  TEST_CASE("result objects") {
    const auto d = to_json(cheeger_dichotomy(cycle_graph(6)));
    CHECK(d["branch"] == "large-witness");
    CHECK(d["maximal"].size() == 6);
    const auto c = to_json(cheeger_exact(cycle_graph(6)));
    CHECK(c["h"]["exact"] == "2/3");
    CHECK(c["mode"] == "exact");
    const auto f = to_json(maximal_folner(cycle_graph(6), Ratio(1, 1), ModeRequest::exact));
    CHECK(f["size"] == 3);
    CHECK(f["ratio"]["exact"] == "2/3");
    const auto empty = to_json(maximal_folner(complete_graph(4), Ratio(1, 2), ModeRequest::exact));
    CHECK(empty["ratio"].is_null());
  }
}
