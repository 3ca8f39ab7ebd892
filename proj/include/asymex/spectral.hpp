// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymex/graph.hpp"
#include "asymex/ratio.hpp"

namespace asymex {

/// Dense symmetric matrix stored as its lower triangle.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), lower_(n * (n + 1) / 2, 0.0) {}

  static SymmetricMatrix identity(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return lower_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) { lower_[index(i, j)] = v; }
  void add(std::size_t i, std::size_t j, double v) { lower_[index(i, j)] += v; }

  /// Row-major n x n copy.
  std::vector<double> dense() const;
  double frobenius() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<double> lower_;
};

/// Deg - Adj.
SymmetricMatrix laplacian(const Graph& g);

struct EigenDecomposition {
  std::vector<double> values;   ///< nondecreasing
  std::vector<double> vectors;  ///< column k (unit eigenvector of values[k]) at [k * n, (k + 1) * n)
  int sweeps = 0;
  double residual = 0.0;  ///< final off-diagonal Frobenius norm
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 * max(1, ||M||_F). Throws ConvergenceError after max_sweeps.
EigenDecomposition eigen_decomposition(const SymmetricMatrix& m, bool want_vectors = true, int max_sweeps = 100);
std::vector<double> eigenvalues(const SymmetricMatrix& m);

/// Second-smallest Laplacian eigenvalue; exactly 0 when the graph is disconnected.
double spectral_gap(const Graph& g);

/// Largest eigenvalue by power iteration from the normalised alternating vector.
double largest_eigenvalue(const SymmetricMatrix& m, double tol = 1e-12, int max_iterations = 100000);

/// Unit vector orthogonal to constants approximating a Fiedler vector. Exact
/// (Jacobi) up to `jacobi_limit` vertices, deflated power iteration above.
std::vector<double> fiedler_vector(const Graph& g, std::size_t jacobi_limit = 160);

enum class PoincareMethod { eigen_exact, subset_sweep, subgradient_descent, brute_force };
enum class BoundDirection { exact, upper };

std::string to_string(PoincareMethod m);
std::string to_string(BoundDirection d);
PoincareMethod parse_poincare_method(const std::string& s);

struct PoincareEstimate {
  double p = 2.0;
  double value = 0.0;
  PoincareMethod method = PoincareMethod::eigen_exact;
  BoundDirection direction = BoundDirection::exact;
  std::vector<double> witness;  ///< mean-zero
};

struct PoincareOptions {
  std::uint64_t seed = 1;
  int starts = 4;
  int max_iterations = 200000;
  std::size_t subset_cap = 20;       ///< all subsets enumerated by subset_sweep up to this size
  std::size_t brute_force_cap = 12;  ///< 3^n enumeration by brute_force up to this size
};

/// Quotient (1/2) sum_{x~y ordered} |f(x)-f(y)|^p / sum_x |f(x)-mean(f)|^p.
/// Throws PreconditionError for constant f.
double poincare_ratio(const Graph& g, std::span<const double> f, double p);

/// Optimal constant of the real-valued p-Poincare inequality.
///  - eigen_exact: p = 2 only, returns lambda_2.
///  - subset_sweep: best indicator function among Fiedler sweep sets, and all
///    subsets when |G| <= subset_cap. Always an upper bound.
///  - subgradient_descent: multi-start projected descent on unit mean-zero
///    vectors. For p = 2 each step minimises the quotient over span{f, g, previous
///    step}; otherwise a backtracking step along the negative subgradient
///    (grow by 1.5 on success, halve on failure). Upper bound.
///  - brute_force: p = 1 only, |G| <= brute_force_cap. Minimises over functions
///    taking values {1/|P|, 0, -1/|M|} on a partition (P, Z, M); reported exact.
/// Disconnected graphs give 0 with a mean-removed component indicator.
PoincareEstimate poincare_constant(const Graph& g, double p, PoincareMethod method, const PoincareOptions& opts = {});

struct LipschitzReport {
  double lhs = 0.0;     ///< (2 eps / n) sum |f(x)|^p
  double middle = 0.0;  ///< (1 / n) sum_{x~y ordered} |f(x)-f(y)|^p
  double rhs = 0.0;     ///< D L^p
  double L = 0.0;       ///< max over edges of |f(x)-f(y)|
  bool holds = true;
};

/// Evaluates the displacement bound (2 eps/n) sum|f|^p <= (1/n) sum|df|^p <= D L^p
/// for mean-zero f (tolerance 1e-9). The first inequality needs eps to be a
/// valid lower estimate of the Poincare constant.
LipschitzReport lipschitz_displacement_check(const Graph& g, std::span<const double> f, double p, double eps);

struct SpectralCheegerBound {
  double lower = 0.0;  ///< lambda_2 / (2D)
  double lambda2 = 0.0;
  int max_degree = 0;
  Ratio h;             ///< vertex Cheeger constant (exact under the cap)
  bool h_exact = true;
};

SpectralCheegerBound cheeger_spectral_bound(const Graph& g, std::size_t exact_cap = 22);

}  // namespace asymex
