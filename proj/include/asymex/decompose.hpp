// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymex/expansion.hpp"
#include "asymex/family.hpp"
#include "asymex/ratio.hpp"
#include "asymex/vertex_set.hpp"

namespace asymex {

/// c(1/2 - alpha) - D * c(alpha) * 2 alpha / (1 - 2 alpha). Requires 0 < alpha < 1/4.
/// Infinite profile values are allowed; an undefined result is -inf.
double predicted_bound(double c_complement, double c_alpha, double alpha, int D);
/// Same, reading both values from a profile that holds alpha and 1/2 - alpha.
double predicted_bound(const ExpansionProfile& profile, double alpha, int D);

struct ExhaustionCell {
  VertexSet F;  ///< removed set
  VertexSet Y;  ///< complement of F
  std::optional<Ratio> measured;  ///< Cheeger constant of Y (nullopt: |Y| < 2)
  Mode mode = Mode::exact;
  bool connected = true;
};

/// Sets Y_{n,k} = X_n \ F_{n,k} for decreasing alpha_k, indexed cells[k][n].
struct Exhaustion {
  bool metric = false;
  std::vector<double> alphas;
  std::vector<double> radii;
  /// Threshold used to extract F_{n,k}: c(alpha_k) (strict) for graphs, c (non-strict) for metric spaces.
  std::vector<Ratio> thresholds;
  bool strict_threshold = true;
  /// Constant the construction guarantees for {Y_{n,k}}_n.
  std::vector<double> c_guaranteed;
  /// True when Y_{n,k} is claimed to satisfy |dA| > c|A| strictly.
  bool strict_claim = false;
  /// min_n Cheeger constant of Y_{n,k} (heuristic upper bound if any cell is heuristic).
  std::vector<std::optional<double>> c_measured;
  std::vector<Mode> modes;
  /// False once the sets are no longer maximal Folner complements (after nesting); check (c) is then skipped.
  bool maximal_sets = true;
  std::optional<double> alpha0;
  std::vector<std::string> diagnostics;
  int max_degree = 0;
  std::vector<std::vector<ExhaustionCell>> cells;

  std::size_t levels() const noexcept { return alphas.size(); }
  std::size_t blocks() const noexcept { return cells.empty() ? 0 : cells.front().size(); }
};

/// Exhaustion of a bounded-degree graph family. alphas must lie in (0, 1/4).
/// F_{n,k} is an inclusion-maximal set with |dF| < c(alpha_k)|F|, where
/// c = min_n profile_n. Reports alpha_0 or the diagnostic
/// "expander or range too short".
Exhaustion graph_exhaustion(const Family& family, std::span<const double> alphas,
                            ModeRequest mode = ModeRequest::automatic, const SearchOptions& opts = {});

/// Exhaustion of a family of metric spaces: F_{n,k} is a maximal set with
/// |F| <= |X|/2 and |d_{R_k} F| <= c|F|. The claimed constant is c/2 (strict).
Exhaustion metric_exhaustion(const Family& family, const Ratio& c, std::span<const double> radii,
                             std::span<const double> alphas, ModeRequest mode = ModeRequest::automatic,
                             const SearchOptions& opts = {});

struct Violation {
  std::size_t block = 0;
  std::size_t level = 0;
  std::string kind;  ///< "size", "expansion", "lemma", "converse", "partition"
  VertexSet A;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t cells_checked = 0;
  std::size_t heuristic_cells = 0;  ///< cells where (b) was searched heuristically and (c) skipped
  bool passed() const noexcept { return violations.empty(); }
};

/// Checks (a) |Y| >= (1 - alpha_k)|X|, (b) the claimed expansion of every Y_{n,k}
/// and (c) the maximality inequality |d_R A \ F| > c|A| (>= for strict thresholds)
/// for A in X \ F with |A| <= floor(|X|/2) - |F|.
VerificationReport verify_exhaustion(const Family& family, const Exhaustion& E, const SearchOptions& opts = {});

/// Replaces Y_{n,k} by the union of Y_{n,j} over j <= k and recertifies each
/// level by its measured Cheeger constant. Throws CertificationError when a
/// level has constant 0.
Exhaustion nest_exhaustion(const Family& family, const Exhaustion& E, const SearchOptions& opts = {});

/// First A in X \ F (lexicographic) with 0 < |A| <= floor(|X|/2) - |F| and
/// |d_R A \ F| <= c|A| (< c|A| when `strict_family`). Exact enumeration.
std::optional<VertexSet> lemma_counterexample(const Space& X, const VertexSet& F, const Ratio& c, double R = 1.0,
                                              bool strict_family = false);

/// First nonempty c-Folner set A of the subspace X \ F with 2|A| <= |X| - 2|F|.
std::optional<VertexSet> corollary_counterexample(const Graph& X, const VertexSet& F, const Ratio& c);

/// For each alpha, the level k with |Y_{n,k}| > (1 - alpha/2)|X_n| for all n,
/// checked against profile_n(alpha) >= min{c_k/2, (c_k/D)(1 - alpha)} using
/// measured c_k (c_guaranteed on heuristic levels). Alphas with no such level
/// are skipped. Heuristic profile values come from real sets, so any value
/// below the bound is a genuine violation.
std::vector<Violation> converse_check(const Family& family, const Exhaustion& E, std::span<const double> alphas,
                                      ModeRequest mode = ModeRequest::exact, const SearchOptions& opts = {});

}  // namespace asymex
