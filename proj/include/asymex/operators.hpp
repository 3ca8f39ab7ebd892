// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "asymex/decompose.hpp"
#include "asymex/expansion.hpp"
#include "asymex/family.hpp"
#include "asymex/vertex_set.hpp"

namespace asymex {

/// Block-diagonal real operator on the points of a family. Entries between
/// different blocks are zero. Block n is stored densely, row-major.
class BlockOperator {
 public:
  enum class Kind { generic, averaging };

  BlockOperator() = default;
  BlockOperator(std::vector<std::size_t> sizes, std::vector<std::vector<double>> blocks, Kind kind = Kind::generic);

  std::size_t block_count() const noexcept { return sizes_.size(); }
  std::size_t block_size(std::size_t n) const { return sizes_.at(n); }
  const std::vector<double>& block(std::size_t n) const { return blocks_.at(n); }
  double entry(std::size_t n, std::size_t i, std::size_t j) const { return blocks_[n][i * sizes_[n] + j]; }
  Kind kind() const noexcept { return kind_; }
  std::size_t total_size() const noexcept;

  friend BlockOperator operator-(const BlockOperator& a, const BlockOperator& b);

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<double>> blocks_;
  Kind kind_ = Kind::generic;
};

/// Blocks larger than this are rejected by the dense constructors.
inline constexpr std::size_t kMaxDenseBlock = 4096;

/// P_X: every entry of block n equals 1/|X_n|.
BlockOperator averaging_projection(const Family& family);

/// Q: entries 1/|Y_n| on Y_n x Y_n inside block n, zero elsewhere.
BlockOperator compressed_projection(const Family& family, std::span<const VertexSet> Y);

double frobenius_norm(const BlockOperator& T);

/// Largest singular value of a dense m x m matrix by power iteration on T^T T.
/// Throws ConvergenceError after max_iterations.
double dense_operator_norm(std::span<const double> a, std::size_t m, double tol = 1e-12, int max_iterations = 100000);

/// Max over blocks of the largest singular value.
double operator_norm(const BlockOperator& T);

struct ApproximationError {
  double measured = 0.0;  ///< ||P_X - Q_k||
  double bound = 0.0;     ///< sqrt(2 alpha_k)
  double alpha = 0.0;     ///< max_n (1 - |Y_{n,k}| / |X_n|)
  bool holds = true;      ///< measured <= bound + 1e-9
};

ApproximationError approximation_error(const Family& family, const Exhaustion& E, std::size_t k);

/// ||chi_A T chi_B|| for point sets over the whole family (universe = total size).
/// Averaging operators use sqrt(|A n X_n| |B n X_n|) / |X_n|.
double cut_norm(const BlockOperator& T, const VertexSet& A, const VertexSet& B);
/// Same, always by power iteration on the masked blocks.
double cut_norm_generic(const BlockOperator& T, const VertexSet& A, const VertexSet& B);

struct PropagationProfile {
  std::vector<double> epsilons;
  int R_max = 0;
  std::vector<std::optional<int>> radius;  ///< least R with max_n nu_n(R) <= eps, per epsilon
  std::vector<std::vector<double>> nu;     ///< nu[n][R - 1], R = 1..R_max
  std::vector<Mode> modes;                 ///< per block; heuristic values are lower bounds
};

/// nu_n(R) = max over A of sqrt(|A| |B|) / |X_n| with B = {x : d(x, A) >= R},
/// for the averaging projection.
PropagationProfile propagation_profile(const Family& family, std::span<const double> epsilons, int R_max,
                                       ModeRequest mode = ModeRequest::automatic, const SearchOptions& opts = {});

/// max |T_{x,y}| over pairs outside F x F (F over the whole family).
double ghost_defect(const BlockOperator& T, const Family& family, const VertexSet& F);

}  // namespace asymex
