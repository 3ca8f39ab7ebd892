// SPDX-License-Identifier: Apache-2.0
#pragma once

// Seeded invariant suites run by `asymex verify`. Every suite is a pure
// function of its options.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "asymex/exact.hpp"
#include "asymex/graph.hpp"

namespace asymex {

struct SuiteOptions {
  std::size_t count = 200;  ///< corpus size (suites scale their own sub-corpora from it)
  std::uint64_t seed = 1;
  std::size_t exact_cap = exact::kDefaultCap;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  ///< first few violations, human readable
  std::vector<std::string> notes;
  bool passed() const noexcept { return violations == 0; }
};

/// count seeded connected graphs on lo..hi vertices.
std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed, std::size_t lo, std::size_t hi);

/// Maximal c-Folner F, c in {0.1, ..., 1.0}: every nonempty A in X \ F with
/// |A| <= floor(|X|/2) - |F| has |dA \ F| > c|A|.
SuiteResult lemma_suite(const SuiteOptions& opts);
/// Same corpus: Folner sets of X \ F have size > (|X| - 2|F|) / 2.
SuiteResult corollary_suite(const SuiteOptions& opts);
/// Descent estimate of the 2-Poincare constant vs Jacobi lambda_2, and gap(K_m) = m.
SuiteResult spectral_suite(const SuiteOptions& opts);
/// Closed-form vs iterative cut norms of P_X, and operator norm <= Frobenius norm.
SuiteResult operator_suite(const SuiteOptions& opts);
/// Union identity, intersection bound and submodularity over all subset pairs.
SuiteResult boundary_suite(const SuiteOptions& opts);
/// Cheeger-set dichotomy on connected graphs.
SuiteResult dichotomy_suite(const SuiteOptions& opts);
/// Transitive-equivalence check on cycles and hypercubes (consistent) and the
/// perturbed family (hypothesis violated).
SuiteResult transitive_suite(const SuiteOptions& opts);

/// lemma3, corollary, spectral, operator, boundary, dichotomy, transitive.
const std::vector<std::string>& suite_names();
/// Throws PreconditionError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace asymex
