// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>

#include "asymex/cli.hpp"
#include "asymex/decompose.hpp"
#include "asymex/errors.hpp"
#include "asymex/expansion.hpp"
#include "asymex/generators.hpp"
#include "asymex/homogeneity.hpp"
#include "asymex/io.hpp"
#include "asymex/operators.hpp"
#include "asymex/parallel.hpp"
#include "asymex/report.hpp"
#include "asymex/spectral.hpp"
#include "asymex/suites.hpp"

namespace py = pybind11;
using namespace asymex;

namespace {

SearchOptions options(std::size_t cap, std::uint64_t seed) {
  SearchOptions o;
  o.exact_cap = cap;
  o.seed = seed;
  return o;
}

std::vector<int> block_indices(std::size_t n) {
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  return idx;
}

}  // namespace

PYBIND11_MODULE(_asymex, m) {
  m.doc() = "Asymptotic expansion analysis of finite graph families";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def("__len__", &Graph::size)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("connected", &Graph::connected)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.size()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("hypercube_graph", &hypercube_graph);
  m.def("dumbbell", &dumbbell, py::arg("n"), py::arg("bridge_len"));
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "random_regular_expander",
      [](std::size_t n, int d, std::uint64_t seed) { return random_regular_expander(n, d, seed); }, py::arg("n"),
      py::arg("d"), py::arg("seed"));
  m.def("diameter", &diameter);
  m.def("girth", &girth);

  m.def("parse_graph", &parse_graph, py::arg("text"), py::arg("source") = "<input>");
  m.def("format_graph", &format_graph);
  m.def("read_graph", [](const std::string& path) { return read_graph_file(path); });
  m.def("write_graph", [](const std::string& path, const Graph& g) { write_graph_file(path, g); });

  m.def(
      "generate",
      [](const std::string& kind, const std::vector<int>& ns, int d, std::uint64_t seed,
         std::optional<std::size_t> bridge_len) {
        GenSpec spec{kind, ns, d, seed, bridge_len};
        const auto fam = generate(spec);
        py::dict out;
        out["label"] = fam.label;
        out["classification"] = to_string(fam.classification);
        out["max_degree"] = fam.max_degree;
        out["graphs"] = fam.graphs();
        std::vector<std::optional<Graph>> quotients;
        std::vector<std::vector<int>> maps;
        for (const auto& mem : fam.members) {
          quotients.push_back(mem.quotient);
          maps.push_back(mem.quotient_map);
        }
        out["quotients"] = quotients;
        out["quotient_maps"] = maps;
        return out;
      },
      py::arg("kind"), py::arg("ns"), py::arg("d") = 3, py::arg("seed") = 1, py::arg("bridge_len") = py::none());

  m.def(
      "_cheeger",
      [](const Graph& g, const std::string& mode, std::size_t cap, std::uint64_t seed) {
        const Mode md = resolve_mode(parse_mode_request(mode), g.size(), cap);
        const auto r = md == Mode::exact ? cheeger_exact(g, cap) : cheeger_heuristic(g, options(cap, seed));
        return to_json(r).dump();
      },
      py::arg("g"), py::arg("mode") = "auto", py::arg("exact_cap") = exact::kDefaultCap, py::arg("seed") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "_expansion_profile",
      [](const Graph& g, const std::vector<double>& alphas, double R, const std::string& mode, std::size_t cap,
         std::uint64_t seed) {
        return to_json(expansion_profile(Space{g}, alphas, R, parse_mode_request(mode), options(cap, seed))).dump();
      },
      py::arg("g"), py::arg("alphas"), py::arg("R") = 1.0, py::arg("mode") = "auto",
      py::arg("exact_cap") = exact::kDefaultCap, py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "_family_certificate",
      [](const std::vector<Graph>& graphs, const std::vector<double>& alphas, const std::vector<double>& radii,
         const std::string& mode, std::size_t cap, std::uint64_t seed) {
        return to_json(family_certificate(graph_family(graphs), alphas, radii, parse_mode_request(mode),
                                          options(cap, seed)))
            .dump();
      },
      py::arg("graphs"), py::arg("alphas"), py::arg("radii") = std::vector<double>{}, py::arg("mode") = "auto",
      py::arg("exact_cap") = exact::kDefaultCap, py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("spectral_gap", &spectral_gap, py::call_guard<py::gil_scoped_release>());
  m.def(
      "laplacian_eigenvalues", [](const Graph& g) { return eigenvalues(laplacian(g)); },
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "poincare_constant",
      [](const Graph& g, double p, const std::string& method, std::uint64_t seed) {
        PoincareOptions o;
        o.seed = seed;
        const auto e = poincare_constant(g, p, parse_poincare_method(method), o);
        return py::make_tuple(e.value, to_string(e.method), to_string(e.direction), e.witness);
      },
      py::arg("g"), py::arg("p") = 2.0, py::arg("method") = "eigen-exact", py::arg("seed") = 1);

  m.def(
      "_graph_exhaustion",
      [](const std::vector<Graph>& graphs, const std::vector<double>& alphas, const std::string& mode,
         std::size_t cap, std::uint64_t seed) {
        const auto E = graph_exhaustion(graph_family(graphs), alphas, parse_mode_request(mode), options(cap, seed));
        return to_json(E, block_indices(graphs.size())).dump();
      },
      py::arg("graphs"), py::arg("alphas"), py::arg("mode") = "auto", py::arg("exact_cap") = exact::kDefaultCap,
      py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "_verify_exhaustion",
      [](const std::vector<Graph>& graphs, const std::string& exhaustion, std::size_t cap, std::uint64_t seed) {
        const Family fam = graph_family(graphs);
        const auto E = exhaustion_from_json(Json::parse(exhaustion), fam.block_sizes());
        return to_json(verify_exhaustion(fam, E, options(cap, seed)), block_indices(graphs.size())).dump();
      },
      py::arg("graphs"), py::arg("exhaustion"), py::arg("exact_cap") = exact::kDefaultCap, py::arg("seed") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "_propagation_profile",
      [](const std::vector<Graph>& graphs, const std::vector<double>& eps, int r_max, const std::string& mode,
         std::size_t cap, std::uint64_t seed) {
        const auto p = propagation_profile(graph_family(graphs), eps, r_max, parse_mode_request(mode), options(cap, seed));
        return to_json(p, block_indices(graphs.size())).dump();
      },
      py::arg("graphs"), py::arg("epsilons"), py::arg("r_max"), py::arg("mode") = "auto",
      py::arg("exact_cap") = exact::kDefaultCap, py::arg("seed") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "_cheeger_dichotomy", [](const Graph& g, std::size_t cap) { return to_json(cheeger_dichotomy(g, cap)).dump(); },
      py::arg("g"), py::arg("exact_cap") = exact::kDefaultCap, py::call_guard<py::gil_scoped_release>());

  m.def(
      "run_suite",
      [](const std::string& name, std::size_t count, std::uint64_t seed) {
        SuiteOptions o;
        o.count = count;
        o.seed = seed;
        const auto r = run_suite(name, o);
        py::dict out;
        out["name"] = r.name;
        out["cases"] = r.cases;
        out["checks"] = r.checks;
        out["violations"] = r.violations;
        out["failures"] = r.failures;
        out["notes"] = r.notes;
        out["passed"] = r.passed();
        return out;
      },
      py::arg("name"), py::arg("count") = 200, py::arg("seed") = 1);
  m.def("suite_names", &suite_names);

  m.def("set_threads", &set_thread_count);
  m.def(
      "main",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv_s{"asymex"};
        argv_s.insert(argv_s.end(), args.begin(), args.end());
        std::vector<char*> argv;
        for (auto& s : argv_s) argv.push_back(s.data());
        py::gil_scoped_release release;
        return main_entry(static_cast<int>(argv.size()), argv.data(), std::cout, std::cerr);
      },
      py::arg("args"));
}
