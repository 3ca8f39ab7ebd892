// SPDX-License-Identifier: Apache-2.0
#include "asymex/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "asymex/errors.hpp"

namespace asymex {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, const std::string& where) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) throw ParseError(where + ": expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Graph parse_graph(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  long long n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = split_ws(line);
    const std::string where = source + ":" + std::to_string(lineno);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError(where + ": first line must be 'n <N>'");
      n = parse_int(tok[1], where);
      if (n < 0) throw ParseError(where + ": negative vertex count");
      continue;
    }
    if (tok.size() != 3 || tok[0] != "e") throw ParseError(where + ": expected 'e <u> <v>'");
    const long long u = parse_int(tok[1], where), v = parse_int(tok[2], where);
    if (u < 0 || v >= n || u >= v) throw ParseError(where + ": edge needs 0 <= u < v < n");
    const Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!seen.insert(e).second) throw ParseError(where + ": duplicate edge");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(source + ": missing 'n <N>' header");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path), path.string()); }

std::string format_graph(const Graph& g) {
  std::string s = "n " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) s += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) { write_text_file(path, format_graph(g)); }

Manifest parse_manifest(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
  try {
    Manifest m;
    if (!j.is_object()) throw ParseError(source + ": manifest must be a JSON object");
    m.label = j.value("label", std::string());
    if (!j.contains("graphs") || !j.at("graphs").is_array()) throw ParseError(source + ": missing 'graphs' array");
    for (const auto& g : j.at("graphs")) {
      ManifestEntry e;
      e.index = g.at("index").get<int>();
      e.path = g.at("path").get<std::string>();
      m.graphs.push_back(std::move(e));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Manifest read_manifest(const std::filesystem::path& path) { return parse_manifest(read_text_file(path), path.string()); }

std::string format_manifest(const Manifest& m) {
  nlohmann::ordered_json j;
  j["label"] = m.label;
  j["graphs"] = nlohmann::ordered_json::array();
  for (const auto& e : m.graphs) j["graphs"].push_back({{"index", e.index}, {"path", e.path}});
  return j.dump(2) + "\n";
}

LoadedFamily load_family(const std::filesystem::path& manifest_path) {
  const Manifest m = read_manifest(manifest_path);
  LoadedFamily f;
  f.label = m.label;
  const auto base = manifest_path.parent_path();
  for (const auto& e : m.graphs) {
    f.indices.push_back(e.index);
    f.graphs.push_back(read_graph_file(base / e.path));
  }
  if (f.graphs.empty()) throw ParseError(manifest_path.string() + ": manifest lists no graphs");
  return f;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace asymex
