// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymex/exact.hpp"
#include "asymex/family.hpp"
#include "asymex/graph.hpp"
#include "asymex/metric.hpp"
#include "asymex/ratio.hpp"
#include "asymex/vertex_set.hpp"

namespace asymex {

/// How a value was obtained. Heuristic values are upper bounds on the minimum.
enum class Mode { exact, heuristic };
/// Requested evaluation mode; automatic picks exact under the cap.
enum class ModeRequest { exact, heuristic, automatic };

std::string to_string(Mode m);  // "exact" / "heuristic-upper-bound"
ModeRequest parse_mode_request(const std::string& s);

struct SearchOptions {
  std::size_t exact_cap = exact::kDefaultCap;
  std::size_t budget = 400;  ///< local-search steps per start
  int starts = 6;
  std::uint64_t seed = 1;
};

/// Resolves a request against a point count. Throws CapExceeded for an exact
/// request above the cap.
Mode resolve_mode(ModeRequest req, std::size_t n, std::size_t cap);

/// |dA| / |A|. Throws PreconditionError for empty A.
Ratio boundary_ratio(const Graph& g, const VertexSet& A);

struct CheegerResult {
  Ratio h;
  std::vector<VertexSet> witnesses;          ///< minimisers in lexicographic order (possibly truncated)
  std::vector<VertexSet> maximal_witnesses;  ///< inclusion-maximal minimisers
  std::size_t minimiser_count = 0;
  bool exact = true;
  bool witnesses_truncated = false;
};

/// Exact vertex Cheeger constant by enumerating every A with 0 < |A| <= n/2.
CheegerResult cheeger_exact(const Graph& g, std::size_t cap = exact::kDefaultCap, std::size_t witness_limit = 4096);

/// Upper bound with a valid witness: Fiedler sweeps and BFS prefixes, refined
/// by randomised local search with add/remove/swap moves. Deterministic in the seed.
CheegerResult cheeger_heuristic(const Graph& g, const SearchOptions& opts);

/// Lowest boundary ratio found for a subset A of g with lo <= |A| <= hi.
struct SetSearchResult {
  bool found = false;
  VertexSet set;
  int boundary = 0;
  Ratio ratio() const { return Ratio(boundary, static_cast<std::int64_t>(set.count())); }
};

SetSearchResult exact_min_ratio(const Graph& g, int lo, int hi);
SetSearchResult heuristic_min_ratio(const Graph& g, int lo, int hi, const SearchOptions& opts);

struct ProfileEntry {
  double alpha = 0.0;
  std::optional<Ratio> value;  ///< nullopt: no admissible size (+inf)
  VertexSet witness;
  Mode mode = Mode::exact;
};

struct ExpansionProfile {
  double R = 1.0;
  std::vector<ProfileEntry> entries;  ///< sorted by alpha

  /// Entry for alpha (exact match within 1e-12). Throws if absent.
  const ProfileEntry& at(double alpha) const;
};

/// Smallest admissible size ceil(alpha * n) (at least 1).
int profile_lower_size(double alpha, std::size_t n);

/// profile(alpha) = min |d_R A| / |A| over ceil(alpha n) <= |A| <= floor(n/2).
/// Heuristic entries are made non-decreasing in alpha.
ExpansionProfile expansion_profile(const Space& space, std::span<const double> grid, double R = 1.0,
                                   ModeRequest mode = ModeRequest::automatic, const SearchOptions& opts = {});

/// Admission rule for Folner-type sets: |dA| <= c|A|, or |dA| < c|A| when strict.
struct Threshold {
  Ratio c;
  bool strict = false;
  bool admits(std::int64_t boundary, std::int64_t size) const {
    return strict ? c.strictly_admits(boundary, size) : c.admits(boundary, size);
  }
};

struct FolnerCertificate {
  Threshold threshold;
  VertexSet F;
  Mode mode = Mode::exact;
  std::optional<Ratio> ratio;  ///< |dF|/|F|, nullopt for empty F
};

/// A set F admitted by the threshold with |F| <= floor(n/2) and no admitted
/// strict superset. Exact mode returns the lexicographically smallest such F;
/// heuristic mode grows a set greedily and probes supersets.
FolnerCertificate maximal_folner(const Space& space, const Threshold& threshold, double R = 1.0,
                                 ModeRequest mode = ModeRequest::automatic, const SearchOptions& opts = {});
FolnerCertificate maximal_folner(const Graph& g, const Ratio& c, ModeRequest mode = ModeRequest::automatic,
                                 const SearchOptions& opts = {});

/// Every inclusion-maximal admitted set (exact only), in lexicographic order.
std::vector<VertexSet> all_maximal_folner_sets(const Graph& g, const Threshold& threshold,
                                               std::size_t cap = exact::kDefaultCap);

struct CertificateEntry {
  double alpha = 0.0;
  double R = 1.0;
  std::optional<Ratio> value;  ///< min over blocks; nullopt when every block is +inf
  std::size_t argmin_block = 0;
  Mode mode = Mode::exact;     ///< heuristic if any block was
  std::vector<ProfileEntry> per_block;
};

struct FamilyCertificate {
  std::vector<CertificateEntry> entries;
  std::string verdict;
  std::string scope = "finite-range certificate";

  const CertificateEntry& at(double alpha) const;
};

/// c(alpha) = min over blocks of profile_n(alpha) with radius R(alpha).
/// `radii` holds one radius per grid point, or a single radius for all.
FamilyCertificate family_certificate(const Family& family, std::span<const double> grid,
                                     std::span<const double> radii = {}, ModeRequest mode = ModeRequest::automatic,
                                     const SearchOptions& opts = {});

}  // namespace asymex
