// SPDX-License-Identifier: Apache-2.0
#include "asymex/report.hpp"

#include <cmath>
#include <limits>

#include "asymex/errors.hpp"
#include "asymex/format.hpp"

namespace asymex {

Json json_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round12(x);
}

double json_to_double(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ParseError("expected a number, got " + j.dump());
}

Json to_json(const VertexSet& s) {
  Json a = Json::array();
  for (int v : s.to_vector()) a.push_back(v);
  return a;
}

Json to_json(const Ratio& r) { return Json{{"value", json_number(r.value())}, {"exact", r.to_string()}}; }

Json to_json(const std::optional<Ratio>& r) {
  if (!r) return Json{{"value", "inf"}, {"exact", "inf"}};
  return to_json(*r);
}

Json to_json(const CheegerResult& r) {
  Json j;
  j["h"] = to_json(r.h);
  j["mode"] = r.exact ? "exact" : "heuristic-upper-bound";
  j["minimiser_count"] = r.minimiser_count;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  j["witnesses_truncated"] = r.witnesses_truncated;
  j["maximal_witnesses"] = Json::array();
  for (const auto& w : r.maximal_witnesses) j["maximal_witnesses"].push_back(to_json(w));
  return j;
}

Json to_json(const ExpansionProfile& p) {
  Json j;
  j["R"] = json_number(p.R);
  j["entries"] = Json::array();
  for (const auto& e : p.entries) {
    j["entries"].push_back(Json{{"alpha", json_number(e.alpha)},
                                {"value", to_json(e.value)},
                                {"mode", to_string(e.mode)},
                                {"witness", to_json(e.witness)}});
  }
  return j;
}

Json to_json(const FolnerCertificate& c) {
  return Json{{"c", to_json(c.threshold.c)},
              {"strict", c.threshold.strict},
              {"F", to_json(c.F)},
              {"size", c.F.count()},
              {"ratio", c.ratio ? to_json(*c.ratio) : Json(nullptr)},
              {"mode", to_string(c.mode)}};
}

Json to_json(const FamilyCertificate& c) {
  Json j;
  j["scope"] = c.scope;
  j["verdict"] = c.verdict;
  j["entries"] = Json::array();
  for (const auto& e : c.entries) {
    Json per = Json::array();
    for (const auto& pe : e.per_block) per.push_back(to_json(pe.value));
    j["entries"].push_back(Json{{"alpha", json_number(e.alpha)},
                                {"R", json_number(e.R)},
                                {"value", to_json(e.value)},
                                {"argmin_block", e.argmin_block},
                                {"mode", to_string(e.mode)},
                                {"per_block", per}});
  }
  return j;
}

Json to_json(const PoincareEstimate& e) {
  Json w = Json::array();
  for (double x : e.witness) w.push_back(json_number(x));
  return Json{{"p", json_number(e.p)},
              {"value", json_number(e.value)},
              {"method", to_string(e.method)},
              {"bound", to_string(e.direction)},
              {"witness", w}};
}

Json to_json(const Exhaustion& e, const std::vector<int>& indices) {
  Json j;
  j["kind"] = e.metric ? "metric" : "graph";
  j["scope"] = "finite-range";
  Json alphas = Json::array(), radii = Json::array(), thr = Json::array(), guar = Json::array(), meas = Json::array(),
       modes = Json::array();
  for (std::size_t k = 0; k < e.levels(); ++k) {
    alphas.push_back(json_number(e.alphas[k]));
    radii.push_back(json_number(e.radii[k]));
    thr.push_back(to_json(e.thresholds[k]));
    guar.push_back(json_number(e.c_guaranteed[k]));
    meas.push_back(e.c_measured[k] ? json_number(*e.c_measured[k]) : Json("inf"));
    modes.push_back(to_string(e.modes[k]));
  }
  j["alphas"] = alphas;
  j["radii"] = radii;
  j["thresholds"] = thr;
  j["strict_threshold"] = e.strict_threshold;
  j["strict_claim"] = e.strict_claim;
  j["maximal_sets"] = e.maximal_sets;
  j["c_guaranteed"] = guar;
  j["c_measured"] = meas;
  j["modes"] = modes;
  j["alpha0"] = e.alpha0 ? json_number(*e.alpha0) : Json(nullptr);
  j["diagnostics"] = e.diagnostics;
  j["max_degree"] = e.max_degree;
  j["cells"] = Json::array();
  for (std::size_t k = 0; k < e.levels(); ++k) {
    for (std::size_t n = 0; n < e.cells[k].size(); ++n) {
      const auto& c = e.cells[k][n];
      j["cells"].push_back(Json{{"k", k},
                                {"block", n},
                                {"n", n < indices.size() ? indices[n] : static_cast<int>(n)},
                                {"F", to_json(c.F)},
                                {"Y", to_json(c.Y)},
                                {"measured", to_json(c.measured)},
                                {"mode", to_string(c.mode)},
                                {"connected", c.connected}});
    }
  }
  return j;
}

namespace {

Json violation_json(const Violation& v, const std::vector<int>& indices) {
  return Json{{"block", v.block},
              {"n", v.block < indices.size() ? indices[v.block] : static_cast<int>(v.block)},
              {"k", v.level},
              {"kind", v.kind},
              {"A", to_json(v.A)},
              {"detail", v.detail}};
}

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "heuristic-upper-bound") return Mode::heuristic;
  throw ParseError("unknown mode '" + s + "'");
}

std::optional<Ratio> parse_optional_ratio(const Json& j) {
  const auto s = j.at("exact").get<std::string>();
  if (s == "inf") return std::nullopt;
  return Ratio::parse(s);
}

VertexSet parse_set(const Json& j, std::size_t universe) {
  VertexSet s(universe);
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || static_cast<std::size_t>(x) >= universe) throw ParseError("vertex id out of range in exhaustion");
    s.insert(x);
  }
  return s;
}

}  // namespace

Json to_json(const VerificationReport& r, const std::vector<int>& indices) {
  Json j;
  j["passed"] = r.passed();
  j["cells_checked"] = r.cells_checked;
  j["heuristic_cells"] = r.heuristic_cells;
  j["violations"] = to_json(r.violations, indices);
  return j;
}

Json to_json(const std::vector<Violation>& v, const std::vector<int>& indices) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(violation_json(x, indices));
  return a;
}

Json to_json(const ApproximationError& a) {
  return Json{{"measured", json_number(a.measured)},
              {"bound", json_number(a.bound)},
              {"alpha", json_number(a.alpha)},
              {"holds", a.holds}};
}

Json to_json(const PropagationProfile& p, const std::vector<int>& indices) {
  Json j;
  j["R_max"] = p.R_max;
  j["scope"] = "measured range";
  j["radius"] = Json::array();
  for (std::size_t i = 0; i < p.epsilons.size(); ++i) {
    j["radius"].push_back(Json{{"epsilon", json_number(p.epsilons[i])},
                               {"R", p.radius[i] ? Json(*p.radius[i]) : Json(nullptr)},
                               {"found", p.radius[i].has_value()}});
  }
  j["blocks"] = Json::array();
  for (std::size_t n = 0; n < p.nu.size(); ++n) {
    Json nu = Json::array();
    for (double x : p.nu[n]) nu.push_back(json_number(x));
    j["blocks"].push_back(Json{{"n", n < indices.size() ? indices[n] : static_cast<int>(n)},
                               {"mode", p.modes[n] == Mode::exact ? "exact" : "heuristic-lower-bound"},
                               {"nu", nu}});
  }
  return j;
}

Json to_json(const DichotomyReport& d) {
  Json maximal = Json::array();
  for (const auto& m : d.maximal) maximal.push_back(to_json(m));
  return Json{{"h", to_json(d.h)},
              {"branch", to_string(d.branch)},
              {"minimiser_count", d.minimiser_count},
              {"maximal", maximal},
              {"witness", to_json(d.witness)}};
}

Json to_json(const TransitiveReport& t, const std::vector<int>& indices) {
  Json j;
  j["status"] = to_string(t.status);
  j["verdict"] = t.verdict;
  j["c_quarter"] = t.c_quarter ? to_json(*t.c_quarter) : Json(nullptr);
  j["blocks"] = Json::array();
  for (std::size_t n = 0; n < t.blocks.size(); ++n) {
    const auto& b = t.blocks[n];
    j["blocks"].push_back(Json{{"n", n < indices.size() ? indices[n] : static_cast<int>(n)},
                               {"established", b.established},
                               {"multiple_maximal", b.multiple_maximal},
                               {"source", b.source},
                               {"h", b.h ? to_json(*b.h) : Json(nullptr)},
                               {"profile_quarter", b.profile_quarter ? to_json(*b.profile_quarter) : Json(nullptr)}});
  }
  return j;
}

Exhaustion exhaustion_from_json(const Json& j, const std::vector<std::size_t>& sizes) {
  try {
    Exhaustion e;
    e.metric = j.at("kind").get<std::string>() == "metric";
    for (const auto& a : j.at("alphas")) e.alphas.push_back(json_to_double(a));
    for (const auto& r : j.at("radii")) e.radii.push_back(json_to_double(r));
    for (const auto& t : j.at("thresholds")) e.thresholds.push_back(Ratio::parse(t.at("exact").get<std::string>()));
    e.strict_threshold = j.at("strict_threshold").get<bool>();
    e.strict_claim = j.at("strict_claim").get<bool>();
    e.maximal_sets = j.at("maximal_sets").get<bool>();
    for (const auto& c : j.at("c_guaranteed")) e.c_guaranteed.push_back(json_to_double(c));
    for (const auto& c : j.at("c_measured")) {
      const double v = json_to_double(c);
      e.c_measured.push_back(std::isinf(v) ? std::nullopt : std::optional<double>(v));
    }
    for (const auto& m : j.at("modes")) e.modes.push_back(parse_mode(m.get<std::string>()));
    if (!j.at("alpha0").is_null()) e.alpha0 = json_to_double(j.at("alpha0"));
    e.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    e.max_degree = j.at("max_degree").get<int>();
    const std::size_t K = e.alphas.size();
    if (e.radii.size() != K || e.thresholds.size() != K || e.c_guaranteed.size() != K || e.c_measured.size() != K ||
        e.modes.size() != K) {
      throw ParseError("exhaustion: per-level arrays have different lengths");
    }
    e.cells.assign(K, std::vector<ExhaustionCell>(sizes.size()));
    std::vector<std::vector<char>> seen(K, std::vector<char>(sizes.size(), 0));
    for (const auto& c : j.at("cells")) {
      const auto k = c.at("k").get<std::size_t>(), n = c.at("block").get<std::size_t>();
      if (k >= K || n >= sizes.size()) throw ParseError("exhaustion: cell index out of range");
      auto& cell = e.cells[k][n];
      cell.F = parse_set(c.at("F"), sizes[n]);
      cell.Y = parse_set(c.at("Y"), sizes[n]);
      cell.measured = parse_optional_ratio(c.at("measured"));
      cell.mode = parse_mode(c.at("mode").get<std::string>());
      cell.connected = c.at("connected").get<bool>();
      seen[k][n] = 1;
    }
    for (const auto& row : seen) {
      for (char s : row) {
        if (!s) throw ParseError("exhaustion: missing cells for the given family");
      }
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("exhaustion: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("exhaustion: ") + ex.what());
  }
}

Json make_report(const std::string& command, const Json& config, const Json& results) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["config"] = config;
  j["results"] = results;
  return j;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

Json parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != kReportSchema) {
    throw ParseError("report: missing or unknown schema tag");
  }
  return j;
}

std::string vertex_list(const VertexSet& s) {
  std::string out;
  for (int v : s.to_vector()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

namespace {

std::string ratio_cell(const std::optional<Ratio>& r) { return r ? format_double(r->value()) : "inf"; }

}  // namespace

std::string profile_csv(const ExpansionProfile& p) {
  std::string s = "alpha,value,mode,witness\n";
  for (const auto& e : p.entries) {
    s += format_double(e.alpha) + "," + ratio_cell(e.value) + "," + to_string(e.mode) + "," + vertex_list(e.witness) + "\n";
  }
  return s;
}

std::string spectrum_csv(const std::vector<double>& eigenvalues) {
  std::string s = "index,eigenvalue\n";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) s += std::to_string(i) + "," + format_double(eigenvalues[i]) + "\n";
  return s;
}

std::string certificate_csv(const FamilyCertificate& c, const std::vector<int>& indices) {
  std::string s = "alpha,R,value,mode,argmin_n\n";
  for (const auto& e : c.entries) {
    const int n = e.argmin_block < indices.size() ? indices[e.argmin_block] : static_cast<int>(e.argmin_block);
    s += format_double(e.alpha) + "," + format_double(e.R) + "," + ratio_cell(e.value) + "," + to_string(e.mode) + "," +
         std::to_string(n) + "\n";
  }
  return s;
}

std::string exhaustion_csv(const Exhaustion& e, const std::vector<int>& indices) {
  std::string s = "n,k,alpha,|F|,|Y|,c_guaranteed,c_measured,mode\n";
  for (std::size_t k = 0; k < e.levels(); ++k) {
    for (std::size_t b = 0; b < e.cells[k].size(); ++b) {
      const auto& c = e.cells[k][b];
      const int n = b < indices.size() ? indices[b] : static_cast<int>(b);
      s += std::to_string(n) + "," + std::to_string(k) + "," + format_double(e.alphas[k]) + "," +
           std::to_string(c.F.count()) + "," + std::to_string(c.Y.count()) + "," + format_double(e.c_guaranteed[k]) +
           "," + ratio_cell(c.measured) + "," + to_string(c.mode) + "\n";
    }
  }
  return s;
}

std::string propagation_csv(const PropagationProfile& p) {
  std::string s = "epsilon,R,found\n";
  for (std::size_t i = 0; i < p.epsilons.size(); ++i) {
    s += format_double(p.epsilons[i]) + "," + (p.radius[i] ? std::to_string(*p.radius[i]) : std::string("none")) + "," +
         (p.radius[i] ? "true" : "false") + "\n";
  }
  return s;
}

std::string nu_csv(const PropagationProfile& p, const std::vector<int>& indices) {
  std::string s = "n,R,nu,mode\n";
  for (std::size_t b = 0; b < p.nu.size(); ++b) {
    const int n = b < indices.size() ? indices[b] : static_cast<int>(b);
    for (std::size_t r = 0; r < p.nu[b].size(); ++r) {
      s += std::to_string(n) + "," + std::to_string(r + 1) + "," + format_double(p.nu[b][r]) + "," +
           (p.modes[b] == Mode::exact ? "exact" : "heuristic-lower-bound") + "\n";
    }
  }
  return s;
}

}  // namespace asymex
