// SPDX-License-Identifier: Apache-2.0
#pragma once

// Graph files: line 1 "n <N>", then one "e <u> <v>" line per edge with
// 0 <= u < v < N and no duplicates. Manifests are JSON:
//   {"label": "...", "graphs": [{"index": 6, "path": "graphs/x.txt"}, ...]}
// with paths relative to the manifest.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "asymex/graph.hpp"

namespace asymex {

/// Parses graph-file text; `source` names the input in error messages. Throws ParseError.
Graph parse_graph(const std::string& text, const std::string& source = "<input>");
Graph read_graph_file(const std::filesystem::path& path);

std::string format_graph(const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

struct ManifestEntry {
  int index = 0;
  std::string path;
};

struct Manifest {
  std::string label;
  std::vector<ManifestEntry> graphs;
};

Manifest parse_manifest(const std::string& text, const std::string& source = "<manifest>");
Manifest read_manifest(const std::filesystem::path& path);
std::string format_manifest(const Manifest& m);

struct LoadedFamily {
  std::string label;
  std::vector<int> indices;
  std::vector<Graph> graphs;
};

/// Reads a manifest and every graph it lists, in manifest order.
LoadedFamily load_family(const std::filesystem::path& manifest_path);

/// Writes text, creating parent directories. Throws std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace asymex
