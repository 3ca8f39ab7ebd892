// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymex/graph.hpp"

namespace asymex {

/// Connected simple d-regular graph on n vertices with Laplacian gap at least
/// gap_threshold (default 0.05 d): configuration-model pairings with loops or
/// repeated edges rejected, then the gap recomputed. Throws GenerationError
/// after `retries` failed samples.
Graph random_regular_expander(std::size_t n, int d, std::uint64_t seed, std::optional<double> gap_threshold = {},
                              int retries = 200);

/// Y and Z side by side (Y ids first) joined by edges (y, z) given in local ids.
Graph perturbed(const Graph& Y, const Graph& Z, std::span<const Edge> join);

/// Y and Z side by side with (y, y') and (z, z') removed and (y, z), (y', z') added.
Graph girth_splice(const Graph& Y, const Graph& Z, Edge yy, Edge zz);

/// a_{n,k} = ceil(n^2 / k^2).
std::size_t default_tower_schedule(int n, int k);
using TowerSchedule = std::function<std::size_t(int n, int k)>;

struct Tower {
  Graph graph;
  std::vector<std::size_t> requested;     ///< a_{n,k}, k = 1..n
  std::vector<std::size_t> level_sizes;   ///< after parity adjustment
  std::vector<std::size_t> level_starts;  ///< first vertex id of each level
};

/// Levels Z_{n,1}, ..., Z_{n,n} (level k has a_{n,k} vertices, raised by one
/// when a_{n,k} d is odd; levels with a_{n,k} <= d are complete graphs), with
/// vertex i of level k joined to vertex i of level k - 1.
Tower tower(int n, const TowerSchedule& schedule, int d, std::uint64_t seed);

struct ScheduleConditions {
  double alpha = 0.0;
  double c = 0.0;
  /// Smallest kbar with sum_{i>=kbar} a_{n,i} < alpha sum_i a_{n,i} for every n >= kbar in range.
  std::optional<int> kbar_tail;
  /// Smallest kbar with a_{n,kbar} < c sum_{i>=kbar} a_{n,i} for every n >= kbar in range.
  std::optional<int> kbar_ratio;
};

/// Numerical check of the tail conditions of a tower schedule over n in ns.
ScheduleConditions check_tower_schedule(const TowerSchedule& schedule, std::span<const int> ns, double alpha, double c);

struct StringQuotient {
  Graph X;                  ///< X' plus the pendant path
  Graph Y;                  ///< quotient: one vertex per block, then the path
  std::vector<int> pi;      ///< X -> Y
  std::size_t block_len = 0;  ///< ceil(log2 n)
  std::size_t base_size = 0;  ///< |X'|
  bool parity_adjusted = false;
  std::vector<int> path;    ///< ids of v_1, ..., v_n in X (v_n touches X')
};

/// X' = random_regular_expander(n ceil(log2 n), d) relabelled in breadth-first
/// order from vertex 0, a path v_1..v_n with v_n attached to vertex 0, and the
/// quotient collapsing n consecutive-id blocks of X'.
StringQuotient string_quotient(int n, int d, std::uint64_t seed);

/// Two copies of K_n joined through a path of bridge_len vertices (an edge when 0).
Graph dumbbell(std::size_t n, std::size_t bridge_len);

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

/// Connected test graph: a random recursive tree plus each remaining pair
/// independently with probability p.
Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed);

enum class Classification { expander, asymptotic_only, negative_control };
std::string to_string(Classification c);

struct GenSpec {
  std::string kind;  ///< random_regular, perturbed, girth_splice, tower, string_quotient, dumbbell
  std::vector<int> ns;
  int d = 3;
  std::uint64_t seed = 1;
  std::optional<std::size_t> bridge_len;  ///< dumbbell; default n
};

struct FamilyMember {
  int n = 0;
  Graph graph;
  std::optional<int> girth;
  std::vector<std::string> notes;
  std::optional<Graph> quotient;       ///< string_quotient only
  std::vector<int> quotient_map;
};

struct GeneratedFamily {
  GenSpec spec;
  std::string label;
  Classification classification = Classification::expander;
  int max_degree = 0;
  std::vector<FamilyMember> members;

  std::vector<Graph> graphs() const;
};

/// Validates the spec and builds every member. Same spec, same output.
GeneratedFamily generate(const GenSpec& spec);

}  // namespace asymex
