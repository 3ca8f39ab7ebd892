// SPDX-License-Identifier: Apache-2.0
#include "asymex/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "asymex/decompose.hpp"
#include "asymex/errors.hpp"
#include "asymex/expansion.hpp"
#include "asymex/family.hpp"
#include "asymex/format.hpp"
#include "asymex/generators.hpp"
#include "asymex/io.hpp"
#include "asymex/operators.hpp"
#include "asymex/parallel.hpp"
#include "asymex/rng.hpp"
#include "asymex/spectral.hpp"
#include "asymex/suites.hpp"

namespace asymex {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kSpectrumLimit = 1200;
constexpr std::size_t kJsonWitnessLimit = 16;

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (int i = 0;; ++i) {
    const double x = round12(lo + step * i);
    if (x > hi + 1e-12) break;
    g.push_back(x);
  }
  return g;
}

int parse_int_token(const std::string& tok) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ConfigError("--n: '" + tok + "' is not an integer");
  }
  if (pos != tok.size()) throw ConfigError("--n: '" + tok + "' is not an integer");
  return v;
}

ModeRequest mode_request(const RunConfig& c) { return c.heuristic ? ModeRequest::automatic : ModeRequest::exact; }

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.exact_cap = c.exact_cap;
  o.seed = c.seed;
  return o;
}

std::string block_file(const std::string& stem, int n) { return stem + "_n" + std::to_string(n) + ".csv"; }

struct Loaded {
  LoadedFamily raw;
  Family family;
};

Loaded load(const RunConfig& c) {
  Loaded l{load_family(c.manifest), {}};
  l.family = graph_family(l.raw.graphs, l.raw.label);
  return l;
}

void emit(const RunConfig& c, const std::string& name, const std::string& text) {
  write_text_file(fs::path(c.out) / name, text);
}

void emit_report(const RunConfig& c, const std::string& name, const Json& results) {
  emit(c, name, render_report(make_report(c.subcommand, config_to_json(c), results)));
}

// gen ------------------------------------------------------------------------

int run_gen(const RunConfig& c, std::ostream& out) {
  GenSpec spec;
  spec.kind = c.kind;
  spec.ns = c.ns;
  spec.d = c.d;
  spec.seed = c.seed;
  spec.bridge_len = c.bridge_len;
  const GeneratedFamily fam = generate(spec);

  Manifest manifest, quotients;
  manifest.label = fam.label;
  quotients.label = fam.label + "-quotient";
  Json members = Json::array();
  for (const auto& m : fam.members) {
    const std::string stem = fam.label + "-n" + std::to_string(m.n);
    const std::string path = "graphs/" + stem + ".txt";
    emit(c, path, format_graph(m.graph));
    manifest.graphs.push_back({m.n, path});
    Json jm{{"n", m.n},
            {"path", path},
            {"vertices", m.graph.size()},
            {"edges", m.graph.edge_count()},
            {"max_degree", m.graph.max_degree()},
            {"girth", m.girth ? Json(*m.girth) : Json("inf")},
            {"notes", m.notes}};
    if (m.quotient) {
      const std::string qpath = "quotients/" + stem + ".txt";
      const std::string mpath = "maps/" + stem + ".txt";
      emit(c, qpath, format_graph(*m.quotient));
      std::string map_text;
      for (int y : m.quotient_map) map_text += std::to_string(y) + "\n";
      emit(c, mpath, map_text);
      quotients.graphs.push_back({m.n, qpath});
      jm["quotient_path"] = qpath;
      jm["map_path"] = mpath;
      jm["quotient_vertices"] = m.quotient->size();
    }
    members.push_back(std::move(jm));
  }
  emit(c, "manifest.json", format_manifest(manifest));
  if (!quotients.graphs.empty()) emit(c, "quotient_manifest.json", format_manifest(quotients));

  Json results;
  results["label"] = fam.label;
  results["classification"] = to_string(fam.classification);
  results["max_degree"] = fam.max_degree;
  results["spec"] = Json{{"kind", spec.kind},
                         {"ns", spec.ns},
                         {"d", spec.d},
                         {"seed", spec.seed},
                         {"bridge_len", spec.bridge_len ? Json(*spec.bridge_len) : Json(nullptr)}};
  results["members"] = std::move(members);
  emit_report(c, "genspec.json", results);
  out << "generated " << fam.members.size() << " graphs (" << fam.label << ", " << to_string(fam.classification)
      << ") in " << c.out << "\n";
  return kExitOk;
}

// analyze --------------------------------------------------------------------

int run_analyze(const RunConfig& c, std::ostream& out) {
  const Loaded l = load(c);
  const auto& graphs = l.raw.graphs;
  const std::size_t B = graphs.size();
  const ModeRequest req = mode_request(c);
  for (const auto& g : graphs) resolve_mode(req, g.size(), c.exact_cap);

  struct BlockResult {
    CheegerResult cheeger;
    ExpansionProfile profile;
    std::optional<std::vector<double>> spectrum;
    double gap = 0.0;
  };
  std::vector<BlockResult> res(B);
  parallel_for(B, [&](std::size_t b) {
    const Graph& g = graphs[b];
    SearchOptions o = search_options(c);
    o.seed = mix_seed(c.seed, b, 0xa1);
    auto& r = res[b];
    r.cheeger = resolve_mode(req, g.size(), c.exact_cap) == Mode::exact ? cheeger_exact(g, c.exact_cap)
                                                                        : cheeger_heuristic(g, o);
    r.profile = expansion_profile(Space{g}, c.alphas, 1.0, req, o);
    if (g.size() <= kSpectrumLimit) {
      r.spectrum = eigenvalues(laplacian(g));
      r.gap = g.size() > 1 ? (g.connected() ? (*r.spectrum)[1] : 0.0) : 0.0;
    } else {
      r.gap = spectral_gap(g);
    }
  });

  Json blocks = Json::array();
  std::string summary = "n,vertices,edges,max_degree,diameter,h,h_mode,spectral_gap\n";
  for (std::size_t b = 0; b < B; ++b) {
    const Graph& g = graphs[b];
    const int n = l.raw.indices[b];
    auto& r = res[b];
    Json cheeger = to_json(r.cheeger);
    if (cheeger["witnesses"].size() > kJsonWitnessLimit) {
      Json cut = Json::array();
      for (std::size_t i = 0; i < kJsonWitnessLimit; ++i) cut.push_back(cheeger["witnesses"][i]);
      cheeger["witnesses"] = std::move(cut);
      cheeger["witnesses_truncated"] = true;
    }
    const auto gi = girth(g);
    Json jb{{"n", n},
            {"vertices", g.size()},
            {"edges", g.edge_count()},
            {"max_degree", g.max_degree()},
            {"connected", g.connected()},
            {"diameter", diameter(g)},
            {"girth", gi ? Json(*gi) : Json("inf")},
            {"cheeger", std::move(cheeger)},
            {"spectral_gap", json_number(r.gap)},
            {"profile", to_json(r.profile)}};
    if (r.spectrum) {
      Json sp = Json::array();
      for (double x : *r.spectrum) sp.push_back(json_number(x));
      jb["spectrum"] = std::move(sp);
      emit(c, block_file("spectrum", n), spectrum_csv(*r.spectrum));
    } else {
      jb["spectrum"] = nullptr;
    }
    blocks.push_back(std::move(jb));
    emit(c, block_file("profile", n), profile_csv(r.profile));
    summary += std::to_string(n) + "," + std::to_string(g.size()) + "," + std::to_string(g.edge_count()) + "," +
               std::to_string(g.max_degree()) + "," + std::to_string(diameter(g)) + "," +
               format_double(r.cheeger.h.value()) + "," + (r.cheeger.exact ? "exact" : "heuristic-upper-bound") + "," +
               format_double(r.gap) + "\n";
    out << "n=" << n << " |X|=" << g.size() << " h=" << r.cheeger.h.to_string() << " ("
        << (r.cheeger.exact ? "exact" : "heuristic-upper-bound") << ") gap=" << format_double(r.gap) << "\n";
  }
  emit(c, "summary.csv", summary);
  emit_report(c, "report.json", Json{{"label", l.raw.label}, {"blocks", std::move(blocks)}});
  return kExitOk;
}

// decompose ------------------------------------------------------------------

int run_decompose(const RunConfig& c, std::ostream& out) {
  const Loaded l = load(c);
  const ModeRequest req = mode_request(c);
  for (const auto& g : l.raw.graphs) resolve_mode(req, g.size(), c.exact_cap);
  const SearchOptions opts = search_options(c);
  const auto& idx = l.raw.indices;

  const Exhaustion E = graph_exhaustion(l.family, c.alphas, req, opts);
  const VerificationReport V = verify_exhaustion(l.family, E, opts);
  Json results;
  results["label"] = l.raw.label;
  results["exhaustion"] = to_json(E, idx);
  results["verification"] = to_json(V, idx);

  const auto converse_alphas = grid(0.1, 0.5, 0.1);
  const auto converse = converse_check(l.family, E, converse_alphas, req, opts);
  results["converse"] = Json{{"alphas", converse_alphas}, {"violations", to_json(converse, idx)}};
  emit(c, "exhaustion.csv", exhaustion_csv(E, idx));

  if (c.nest) {
    try {
      const Exhaustion N = nest_exhaustion(l.family, E, opts);
      const VerificationReport NV = verify_exhaustion(l.family, N, opts);
      results["nested"] = Json{{"exhaustion", to_json(N, idx)}, {"verification", to_json(NV, idx)}};
      emit(c, "nested_exhaustion.csv", exhaustion_csv(N, idx));
    } catch (const CertificationError& e) {
      results["nested"] = Json{{"error", e.what()}, {"block", e.block()}, {"level", e.level()}};
    }
  }
  emit_report(c, "report.json", results);

  for (std::size_t k = 0; k < E.levels(); ++k) {
    out << "k=" << k << " alpha=" << format_double(E.alphas[k]) << " c_guaranteed=" << format_double(E.c_guaranteed[k])
        << " c_measured=" << (E.c_measured[k] ? format_double(*E.c_measured[k]) : std::string("inf")) << " ("
        << to_string(E.modes[k]) << ")\n";
  }
  out << "alpha0=" << (E.alpha0 ? format_double(*E.alpha0) : std::string("none"));
  for (const auto& d : E.diagnostics) out << "; " << d;
  out << "\nverification: " << (V.passed() ? "passed" : "FAILED") << " (" << V.violations.size() << " violations, "
      << V.cells_checked << " cells, " << V.heuristic_cells << " heuristic)\n";
  out << "converse: " << converse.size() << " violations\n";
  return kExitOk;
}

// certify --------------------------------------------------------------------

int run_certify(const RunConfig& c, std::ostream& out) {
  const Loaded l = load(c);
  const ModeRequest req = mode_request(c);
  for (const auto& g : l.raw.graphs) resolve_mode(req, g.size(), c.exact_cap);
  const FamilyCertificate cert = family_certificate(l.family, c.alphas, c.radius, req, search_options(c));
  Json results = to_json(cert);
  for (auto& e : results["entries"]) e["argmin_n"] = l.raw.indices[e["argmin_block"].get<std::size_t>()];
  emit_report(c, "report.json", Json{{"label", l.raw.label}, {"certificate", std::move(results)}});
  emit(c, "certificate.csv", certificate_csv(cert, l.raw.indices));
  out << cert.verdict << "\n";
  return kExitOk;
}

// operator -------------------------------------------------------------------

Exhaustion load_exhaustion(const std::string& path, const Family& fam) {
  const Json rep = parse_report(read_text_file(path));
  if (rep.at("command") != "decompose" || !rep.at("results").contains("exhaustion")) {
    throw ParseError(path + ": not a decompose report");
  }
  return exhaustion_from_json(rep["results"]["exhaustion"], fam.block_sizes());
}

int run_operator(const RunConfig& c, std::ostream& out) {
  const Loaded l = load(c);
  const ModeRequest req = mode_request(c);
  const auto& idx = l.raw.indices;
  const Family& fam = l.family;
  const BlockOperator P = averaging_projection(fam);
  Json results;
  results["label"] = l.raw.label;

  if (!c.exhaustion.empty()) {
    const Exhaustion E = load_exhaustion(c.exhaustion, fam);
    Json errors = Json::array();
    std::string csv = "k,alpha_k,alpha_measured,measured,bound,holds\n";
    for (std::size_t k = 0; k < E.levels(); ++k) {
      const auto a = approximation_error(fam, E, k);
      Json je = to_json(a);
      je["k"] = k;
      je["alpha_k"] = json_number(E.alphas[k]);
      errors.push_back(std::move(je));
      csv += std::to_string(k) + "," + format_double(E.alphas[k]) + "," + format_double(a.alpha) + "," +
             format_double(a.measured) + "," + format_double(a.bound) + "," + (a.holds ? "true" : "false") + "\n";
      out << "k=" << k << " ||P_X - Q_k|| = " << format_double(a.measured) << " <= " << format_double(a.bound) << ": "
          << (a.holds ? "yes" : "NO") << "\n";
    }
    results["approximation"] = std::move(errors);
    emit(c, "errors.csv", csv);
  }

  int r_max = 0;
  if (c.r_max) {
    r_max = *c.r_max;
  } else {
    for (const auto& g : l.raw.graphs) r_max = std::max(r_max, 2 * diameter(g));
    r_max = std::max(r_max, 2);
  }
  const PropagationProfile prop = propagation_profile(fam, c.epsilons, r_max, req, search_options(c));
  results["propagation"] = to_json(prop, idx);
  emit(c, "propagation.csv", propagation_csv(prop));
  emit(c, "nu.csv", nu_csv(prop, idx));
  for (std::size_t i = 0; i < prop.epsilons.size(); ++i) {
    out << "epsilon=" << format_double(prop.epsilons[i]) << " R="
        << (prop.radius[i] ? std::to_string(*prop.radius[i]) : std::string("none found")) << " (R_max " << r_max
        << ")\n";
  }

  Json ghost = Json::array();
  std::string gcsv = "blocks_in_F,defect\n";
  for (std::size_t m = 0; m <= fam.block_count(); ++m) {
    VertexSet F(fam.total_size());
    const std::size_t end = m == fam.block_count() ? fam.total_size() : fam.start(m);
    for (std::size_t x = 0; x < end; ++x) F.insert(static_cast<int>(x));
    const double d = ghost_defect(P, fam, F);
    ghost.push_back(Json{{"blocks_in_F", m}, {"defect", json_number(d)}});
    gcsv += std::to_string(m) + "," + format_double(d) + "\n";
  }
  results["ghost_defect"] = std::move(ghost);
  emit(c, "ghost.csv", gcsv);
  emit_report(c, "report.json", results);
  return kExitOk;
}

// verify ---------------------------------------------------------------------

int run_verify(const RunConfig& c, std::ostream& out) {
  SuiteOptions so;
  so.count = c.count;
  so.seed = c.seed;
  so.exact_cap = c.exact_cap;
  Json suites = Json::array();
  bool ok = true;
  std::ostringstream table;
  table << "suite        cases   checks      violations  status\n";
  for (const auto& name : c.suites) {
    const SuiteResult r = run_suite(name, so);
    ok = ok && r.passed();
    suites.push_back(Json{{"suite", r.name},
                          {"cases", r.cases},
                          {"checks", r.checks},
                          {"violations", r.violations},
                          {"passed", r.passed()},
                          {"failures", r.failures},
                          {"notes", r.notes}});
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-7zu %-11zu %-11zu %s\n", r.name.c_str(), r.cases, r.checks,
                  r.violations, r.passed() ? "PASS" : "FAIL");
    table << line;
    for (const auto& f : r.failures) table << "  violation: " << f << "\n";
    for (const auto& n : r.notes) table << "  note: " << n << "\n";
  }
  Json checked = nullptr;
  if (!c.exhaustion.empty()) {
    const Loaded l = load(c);
    const Exhaustion E = load_exhaustion(c.exhaustion, l.family);
    const VerificationReport V = verify_exhaustion(l.family, E, search_options(c));
    ok = ok && V.passed();
    checked = to_json(V, l.raw.indices);
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-7zu %-11zu %-11zu %s\n", "exhaustion", V.cells_checked, V.cells_checked,
                  V.violations.size(), V.passed() ? "PASS" : "FAIL");
    table << line;
    for (const auto& v : V.violations) {
      table << "  violation: block " << v.block << " level " << v.level << " " << v.kind << ": " << v.detail << "\n";
    }
  }
  out << table.str();
  emit(c, "verify.txt", table.str());
  emit_report(c, "report.json", Json{{"passed", ok}, {"suites", std::move(suites)}, {"exhaustion", std::move(checked)}});
  return ok ? kExitOk : kExitViolation;
}

// config ---------------------------------------------------------------------

template <class T>
T get_field(const Json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

std::vector<double> doubles_field(const Json& j, const char* key) {
  if (!j.is_array()) throw ConfigError(std::string("config key '") + key + "' must be an array");
  std::vector<double> v;
  for (const auto& x : j) {
    try {
      v.push_back(json_to_double(x));
    } catch (const ParseError&) {
      throw ConfigError(std::string("config key '") + key + "' must hold numbers");
    }
  }
  return v;
}

void check_grid(const std::vector<double>& g, const char* flag, double lo, double hi, bool hi_open) {
  for (double x : g) {
    if (!(x > lo) || (hi_open ? !(x < hi) : !(x <= hi))) {
      throw ConfigError(std::string(flag) + " value " + format_double(x) + " outside (" + format_double(lo) + ", " +
                        format_double(hi) + (hi_open ? ")" : "]"));
    }
  }
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"gen", "analyze", "decompose", "certify", "operator", "verify"};
  return names;
}

std::vector<int> parse_n_range(const std::string& text) {
  if (text.empty()) throw ConfigError("--n: empty value");
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_int_token(tok));
    return out;
  }
  const int a = parse_int_token(text.substr(0, dots));
  std::string rest = text.substr(dots + 2);
  int step = 1;
  if (const auto colon = rest.find(':'); colon != std::string::npos) {
    step = parse_int_token(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  const int b = parse_int_token(rest);
  if (step <= 0) throw ConfigError("--n: step must be positive");
  if (b < a) throw ConfigError("--n: empty range " + text);
  for (int x = a; x <= b; x += step) out.push_back(x);
  return out;
}

RunConfig validate(RunConfig c) {
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), c.subcommand) == names.end()) {
    throw ConfigError("unknown or missing subcommand '" + c.subcommand + "'");
  }
  if (c.exact_cap == 0 || c.exact_cap > exact::kMaxCap) {
    throw ConfigError("--exact-cap must lie in 1.." + std::to_string(exact::kMaxCap));
  }
  if (c.threads == 0 || c.threads > 256) throw ConfigError("--threads must lie in 1..256");
  if (c.out.empty()) throw ConfigError("--out must not be empty");
  const bool needs_manifest =
      c.subcommand != "gen" && (c.subcommand != "verify" || !c.exhaustion.empty());
  if (needs_manifest && c.manifest.empty()) throw ConfigError(c.subcommand + " needs --manifest");

  if (c.subcommand == "gen") {
    if (c.kind.empty()) throw ConfigError("gen needs --kind");
    if (c.ns.empty()) throw ConfigError("gen needs --n");
  } else if (c.subcommand == "analyze") {
    if (c.alphas.empty()) c.alphas = grid(0.1, 0.5, 0.1);
    check_grid(c.alphas, "--alpha", 0.0, 0.5, false);
  } else if (c.subcommand == "decompose") {
    if (c.alphas.empty()) c.alphas = {0.2, 0.1, 0.05};
    check_grid(c.alphas, "--alpha", 0.0, 0.25, true);
  } else if (c.subcommand == "certify") {
    if (c.alphas.empty()) c.alphas = grid(0.05, 0.5, 0.05);
    check_grid(c.alphas, "--alpha", 0.0, 0.5, false);
    if (c.radius.empty()) c.radius = {1.0};
    if (c.radius.size() != 1 && c.radius.size() != c.alphas.size()) {
      throw ConfigError("--radius takes one value or one per --alpha value");
    }
    for (double r : c.radius) {
      if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("--radius values must be positive");
    }
  } else if (c.subcommand == "operator") {
    if (c.epsilons.empty()) c.epsilons = {0.4, 0.3, 0.1};
    for (double e : c.epsilons) {
      if (!(e > 0.0) || !std::isfinite(e)) throw ConfigError("--eps values must be positive");
    }
    if (c.r_max && *c.r_max < 1) throw ConfigError("--r-max must be at least 1");
  } else if (c.subcommand == "verify") {
    if ((c.suites.empty() && c.exhaustion.empty()) || (c.suites.size() == 1 && c.suites[0] == "all")) {
      c.suites = suite_names();
    }
    for (const auto& s : c.suites) {
      const auto& known = suite_names();
      if (std::find(known.begin(), known.end(), s) == known.end()) throw ConfigError("unknown suite '" + s + "'");
    }
    if (c.count == 0) throw ConfigError("--count must be positive");
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json j;
  Json alphas = Json::array(), eps = Json::array(), radius = Json::array();
  for (double a : c.alphas) alphas.push_back(json_number(a));
  for (double e : c.epsilons) eps.push_back(json_number(e));
  for (double r : c.radius) radius.push_back(json_number(r));
  j["subcommand"] = c.subcommand;
  j["manifest"] = c.manifest;
  j["out"] = c.out;
  j["alpha"] = alphas;
  j["eps"] = eps;
  j["r_max"] = c.r_max ? Json(*c.r_max) : Json(nullptr);
  j["radius"] = radius;
  j["exact_cap"] = c.exact_cap;
  j["seed"] = c.seed;
  j["heuristic"] = c.heuristic;
  j["kind"] = c.kind;
  j["n"] = c.ns;
  j["d"] = c.d;
  j["bridge_len"] = c.bridge_len ? Json(*c.bridge_len) : Json(nullptr);
  j["exhaustion"] = c.exhaustion;
  j["nest"] = c.nest;
  j["suite"] = c.suites;
  j["count"] = c.count;
  return j;
}

RunConfig config_from_json(const Json& j, RunConfig c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    const char* k = key.c_str();
    if (key == "subcommand") c.subcommand = get_field<std::string>(v, k);
    else if (key == "manifest") c.manifest = get_field<std::string>(v, k);
    else if (key == "out") c.out = get_field<std::string>(v, k);
    else if (key == "alpha") c.alphas = doubles_field(v, k);
    else if (key == "eps") c.epsilons = doubles_field(v, k);
    else if (key == "r_max") c.r_max = v.is_null() ? std::nullopt : std::optional<int>(get_field<int>(v, k));
    else if (key == "radius") c.radius = doubles_field(v, k);
    else if (key == "exact_cap") c.exact_cap = get_field<std::size_t>(v, k);
    else if (key == "seed") c.seed = get_field<std::uint64_t>(v, k);
    else if (key == "threads") c.threads = get_field<std::size_t>(v, k);
    else if (key == "heuristic") c.heuristic = get_field<bool>(v, k);
    else if (key == "kind") c.kind = get_field<std::string>(v, k);
    else if (key == "n") c.ns = v.is_string() ? parse_n_range(v.get<std::string>()) : get_field<std::vector<int>>(v, k);
    else if (key == "d") c.d = get_field<int>(v, k);
    else if (key == "bridge_len")
      c.bridge_len = v.is_null() ? std::nullopt : std::optional<std::size_t>(get_field<std::size_t>(v, k));
    else if (key == "exhaustion") c.exhaustion = get_field<std::string>(v, k);
    else if (key == "nest") c.nest = get_field<bool>(v, k);
    else if (key == "suite") c.suites = get_field<std::vector<std::string>>(v, k);
    else if (key == "count") c.count = get_field<std::size_t>(v, k);
    else throw ConfigError("unknown config key '" + key + "'");
  }
  return c;
}

int run(const RunConfig& c, std::ostream& out) {
  set_thread_count(c.threads);
  if (c.subcommand == "gen") return run_gen(c, out);
  if (c.subcommand == "analyze") return run_analyze(c, out);
  if (c.subcommand == "decompose") return run_decompose(c, out);
  if (c.subcommand == "certify") return run_certify(c, out);
  if (c.subcommand == "operator") return run_operator(c, out);
  if (c.subcommand == "verify") return run_verify(c, out);
  throw ConfigError("unknown subcommand '" + c.subcommand + "'");
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"asymex: asymptotic expansion analysis of finite graph families"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_path, manifest, out_dir, kind, n_text, exhaustion;
  std::vector<double> alphas, eps, radius;
  std::vector<std::string> suites;
  int r_max = 0, d = 3;
  std::size_t exact_cap = 0, threads = 1, bridge_len = 0, count = 0;
  std::uint64_t seed = 1;
  bool heuristic = false, nest = false;

  auto* o_config = app.add_option("--config", config_path, "JSON file mirroring these flags; explicit flags win");
  auto* o_manifest = app.add_option("--manifest", manifest, "family manifest (analyze, decompose, certify, operator)");
  auto* o_out = app.add_option("--out", out_dir, "output directory (default asymex-out)");
  auto* o_seed = app.add_option("--seed", seed, "master seed (default 1)");
  auto* o_threads = app.add_option("--threads", threads, "worker threads; outputs do not depend on it (default 1)");
  auto* o_cap = app.add_option("--exact-cap", exact_cap, "largest point count enumerated exactly (default 22, max 28)");
  auto* o_heur = app.add_flag("--heuristic", heuristic, "use heuristic search above the exact cap instead of failing");
  auto* o_alpha = app.add_option("--alpha", alphas, "alpha grid, comma separated")->delimiter(',');
  auto* o_eps = app.add_option("--eps", eps, "epsilon grid for operator (default 0.4,0.3,0.1)")->delimiter(',');
  auto* o_rmax = app.add_option("--r-max", r_max, "largest propagation radius (default 2 * max diameter)");
  auto* o_radius = app.add_option("--radius", radius, "certify radius, one value or one per alpha")->delimiter(',');
  auto* o_kind = app.add_option("--kind", kind,
                                "gen kind: random_regular, perturbed, girth_splice, tower, string_quotient, dumbbell");
  auto* o_n = app.add_option("--n", n_text, "gen sizes: a..b, a..b:step or a,b,c");
  auto* o_d = app.add_option("--d", d, "gen degree (default 3)");
  auto* o_bridge = app.add_option("--bridge-len", bridge_len, "dumbbell bridge length (default n)");
  auto* o_exh = app.add_option("--exhaustion", exhaustion, "decompose report.json checked by operator and verify");
  auto* o_nest = app.add_flag("--nest", nest, "decompose: also build and verify the nested exhaustion");
  auto* o_suite = app.add_option("--suite", suites, "verify suites, comma separated, or all")->delimiter(',');
  auto* o_count = app.add_option("--count", count, "verify corpus size (default 200)");

  app.add_subcommand("gen", "generate a graph family: graph files, manifest and genspec.json");
  app.add_subcommand("analyze", "profiles, Cheeger constants and spectra per graph");
  app.add_subcommand("decompose", "exhaustion by expanders with its verification report");
  app.add_subcommand("certify", "family expansion-profile curve and verdict");
  app.add_subcommand("operator", "P_X vs Q_k errors, propagation profile and ghost defect");
  app.add_subcommand("verify", "seeded invariant suites and optional --exhaustion report check; exit 5 on any violation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig c;
    if (*o_config) c = config_from_json(
                         [&] {
                           try {
                             return Json::parse(read_text_file(config_path));
                           } catch (const nlohmann::json::exception& e) {
                             throw ConfigError(config_path + ": " + e.what());
                           } catch (const ParseError& e) {
                             throw ConfigError(e.what());
                           }
                         }(),
                         c);
    if (!app.get_subcommands().empty()) c.subcommand = app.get_subcommands().front()->get_name();
    if (*o_manifest) c.manifest = manifest;
    if (*o_out) c.out = out_dir;
    if (*o_seed) c.seed = seed;
    if (*o_threads) c.threads = threads;
    if (*o_cap) c.exact_cap = exact_cap;
    if (*o_heur) c.heuristic = heuristic;
    if (*o_alpha) c.alphas = alphas;
    if (*o_eps) c.epsilons = eps;
    if (*o_rmax) c.r_max = r_max;
    if (*o_radius) c.radius = radius;
    if (*o_kind) c.kind = kind;
    if (*o_n) c.ns = parse_n_range(n_text);
    if (*o_d) c.d = d;
    if (*o_bridge) c.bridge_len = bridge_len;
    if (*o_exh) c.exhaustion = exhaustion;
    if (*o_nest) c.nest = nest;
    if (*o_suite) c.suites = suites;
    if (*o_count) c.count = count;
    return run(validate(c), out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PreconditionError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace asymex
