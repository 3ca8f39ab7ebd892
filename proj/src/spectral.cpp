// SPDX-License-Identifier: Apache-2.0
#include "asymex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "asymex/errors.hpp"
#include "asymex/exact.hpp"
#include "asymex/expansion.hpp"
#include "asymex/rng.hpp"

namespace asymex {

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

std::vector<double> SymmetricMatrix::dense() const {
  std::vector<double> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] = (*this)(i, j);
  }
  return out;
}

double SymmetricMatrix::frobenius() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = (*this)(i, j);
      s += (i == j ? 1.0 : 2.0) * v * v;
    }
  }
  return std::sqrt(s);
}

SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix L(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) L.set(v, v, g.degree(static_cast<int>(v)));
  for (auto [u, v] : g.edges()) L.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), -1.0);
  return L;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigen_decomposition(const SymmetricMatrix& m, bool want_vectors, int max_sweeps) {
  const std::size_t n = m.dimension();
  if (n == 0) throw PreconditionError("eigen_decomposition: empty matrix");
  std::vector<double> a = m.dense();
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  const double tol = 1e-12 * std::max(1.0, m.frobenius());
  EigenDecomposition out;
  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off >= tol) {
    if (sweep == max_sweeps) throw ConvergenceError("Jacobi eigensolver did not converge", off);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double np = c * arp - s * arq;
          const double nq = s * arp + c * arq;
          a[r * n + p] = a[p * n + r] = np;
          a[r * n + q] = a[q * n + r] = nq;
        }
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const double vrp = v[r * n + p];
            const double vrq = v[r * n + q];
            v[r * n + p] = c * vrp - s * vrq;
            v[r * n + q] = s * vrp + c * vrq;
          }
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }
  out.sweeps = sweep;
  out.residual = off;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a[order[k] * n + order[k]];
  if (want_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) out.vectors[k * n + r] = v[r * n + order[k]];
    }
  }
  return out;
}

std::vector<double> eigenvalues(const SymmetricMatrix& m) { return eigen_decomposition(m, false).values; }

double spectral_gap(const Graph& g) {
  if (g.size() <= 1 || component_count(g) > 1) return 0.0;
  return eigenvalues(laplacian(g))[1];
}

double largest_eigenvalue(const SymmetricMatrix& m, double tol, int max_iterations) {
  const std::size_t n = m.dimension();
  if (n == 0) throw PreconditionError("largest_eigenvalue: empty matrix");
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (i % 2 == 0 ? 1.0 : -1.0) / std::sqrt(static_cast<double>(n));
  const auto dense = m.dense();
  double lambda = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += dense[i * n + j] * x[j];
      y[i] = s;
    }
    const double rq = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (norm == 0.0) return 0.0;
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff += (y[i] - rq * x[i]) * (y[i] - rq * x[i]);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    lambda = rq;
    if (std::sqrt(diff) <= tol * std::max(1.0, std::abs(rq))) return lambda;
  }
  throw ConvergenceError("power iteration did not converge", std::abs(lambda));
}

namespace {

void remove_mean(std::vector<double>& x) {
  if (x.empty()) return;
  const double m = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (double& v : x) v -= m;
}

double normalize(std::vector<double>& x) {
  const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  if (norm > 0.0) {
    for (double& v : x) v /= norm;
  }
  return norm;
}

void laplacian_apply(const Graph& g, std::span<const double> x, std::vector<double>& y) {
  y.assign(g.size(), 0.0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    double s = static_cast<double>(g.degree(static_cast<int>(v))) * x[v];
    for (int w : g.neighbors(static_cast<int>(v))) s -= x[static_cast<std::size_t>(w)];
    y[v] = s;
  }
}

}  // namespace

std::vector<double> fiedler_vector(const Graph& g, std::size_t jacobi_limit) {
  const std::size_t n = g.size();
  if (n < 2) return std::vector<double>(n, 0.0);
  if (n <= jacobi_limit) {
    const auto ed = eigen_decomposition(laplacian(g), true);
    std::vector<double> f(ed.vectors.begin() + static_cast<std::ptrdiff_t>(n),
                          ed.vectors.begin() + static_cast<std::ptrdiff_t>(2 * n));
    remove_mean(f);
    normalize(f);
    return f;
  }
  // Power iteration on (cI - L) restricted to mean-zero vectors.
  const double c = 2.0 * g.max_degree() + 1.0;
  std::vector<double> x(n), y;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::cos(3.0 * static_cast<double>(i) / static_cast<double>(n)) + 1e-3 * static_cast<double>(i % 7);
  }
  remove_mean(x);
  normalize(x);
  for (int it = 0; it < 3000; ++it) {
    laplacian_apply(g, x, y);
    for (std::size_t i = 0; i < n; ++i) y[i] = c * x[i] - y[i];
    remove_mean(y);
    if (normalize(y) == 0.0) break;
    x.swap(y);
  }
  return x;
}

std::string to_string(PoincareMethod m) {
  switch (m) {
    case PoincareMethod::eigen_exact: return "eigen-exact";
    case PoincareMethod::subset_sweep: return "subset-sweep";
    case PoincareMethod::subgradient_descent: return "subgradient-descent";
    case PoincareMethod::brute_force: return "brute-force";
  }
  return "";
}

std::string to_string(BoundDirection d) { return d == BoundDirection::exact ? "exact" : "upper"; }

PoincareMethod parse_poincare_method(const std::string& s) {
  for (auto m : {PoincareMethod::eigen_exact, PoincareMethod::subset_sweep, PoincareMethod::subgradient_descent,
                 PoincareMethod::brute_force}) {
    if (to_string(m) == s) return m;
  }
  throw PreconditionError("unknown Poincare method '" + s + "'");
}

double poincare_ratio(const Graph& g, std::span<const double> f, double p) {
  if (f.size() != g.size()) throw PreconditionError("poincare_ratio: function size mismatch");
  if (!(p >= 1.0)) throw PreconditionError("poincare_ratio: need p >= 1");
  const double m = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
  auto pw = [p](double x) { return p == 1.0 ? std::abs(x) : p == 2.0 ? x * x : std::pow(std::abs(x), p); };
  double num = 0.0;
  for (auto [u, v] : g.edges()) num += pw(f[static_cast<std::size_t>(u)] - f[static_cast<std::size_t>(v)]);
  double den = 0.0;
  for (double x : f) den += pw(x - m);
  if (!(den > 1e-300)) throw PreconditionError("poincare_ratio: constant function");
  return num / den;
}

namespace {

PoincareEstimate disconnected_estimate(const Graph& g, double p, PoincareMethod method) {
  const auto comp = components(g);
  std::vector<double> f(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) f[v] = comp[v] == 0 ? 1.0 : 0.0;
  remove_mean(f);
  return {p, 0.0, method, BoundDirection::exact, f};
}

PoincareEstimate eigen_exact(const Graph& g, double p) {
  if (p != 2.0) throw PreconditionError("eigen-exact is only available for p = 2");
  const auto ed = eigen_decomposition(laplacian(g), true);
  const std::size_t n = g.size();
  std::vector<double> f(ed.vectors.begin() + static_cast<std::ptrdiff_t>(n),
                        ed.vectors.begin() + static_cast<std::ptrdiff_t>(2 * n));
  remove_mean(f);
  normalize(f);
  return {p, ed.values[1], PoincareMethod::eigen_exact, BoundDirection::exact, f};
}

double indicator_value(std::size_t cut, std::size_t a, std::size_t n, double p) {
  const double m = static_cast<double>(a) / static_cast<double>(n);
  const double den = static_cast<double>(a) * std::pow(1.0 - m, p) + static_cast<double>(n - a) * std::pow(m, p);
  return static_cast<double>(cut) / den;
}

PoincareEstimate subset_sweep(const Graph& g, double p, const PoincareOptions& opts) {
  const std::size_t n = g.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<char> best_set;
  auto consider = [&](const std::vector<char>& in, std::size_t cut, std::size_t a) {
    const double val = indicator_value(cut, a, n, p);
    if (val < best) {
      best = val;
      best_set = in;
    }
  };
  const auto fv = fiedler_vector(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fv[static_cast<std::size_t>(a)] < fv[static_cast<std::size_t>(b)]; });
  std::vector<char> in(n, 0);
  long long cut = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const int v = order[k];
    for (int w : g.neighbors(v)) cut += in[static_cast<std::size_t>(w)] ? -1 : 1;
    in[static_cast<std::size_t>(v)] = 1;
    consider(in, static_cast<std::size_t>(cut), k + 1);
  }
  if (n <= opts.subset_cap && n <= 63) {
    const auto nb = exact::neighbor_masks(g);
    const exact::Mask full = (exact::Mask{1} << n) - 1;
    for (exact::Mask s = 1; s < full; ++s) {
      std::size_t c = 0;
      for (exact::Mask r = s; r; r &= r - 1) c += static_cast<std::size_t>(exact::popcount(nb[static_cast<std::size_t>(std::countr_zero(r))] & ~s));
      const double val = indicator_value(c, static_cast<std::size_t>(exact::popcount(s)), n, p);
      if (val < best) {
        best = val;
        for (std::size_t v = 0; v < n; ++v) in[v] = static_cast<char>((s >> v) & 1U);
        best_set = in;
      }
    }
  }
  std::vector<double> f(n);
  for (std::size_t v = 0; v < n; ++v) f[v] = best_set[v] ? 1.0 : 0.0;
  remove_mean(f);
  return {p, poincare_ratio(g, f, p), PoincareMethod::subset_sweep, BoundDirection::upper, f};
}

PoincareEstimate brute_force_p1(const Graph& g, const PoincareOptions& opts) {
  const std::size_t n = g.size();
  if (n > opts.brute_force_cap) throw CapExceeded(n, opts.brute_force_cap);
  const auto edges = g.edges();
  std::vector<int> label(n, 0);  // 0 = Z, 1 = P, 2 = M
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_label;
  for (;;) {
    std::size_t np = 0, nm = 0;
    for (int l : label) {
      np += l == 1;
      nm += l == 2;
    }
    if (np > 0 && nm > 0) {
      const double a = 1.0 / static_cast<double>(np);
      const double b = 1.0 / static_cast<double>(nm);
      double num = 0.0;
      for (auto [u, v] : edges) {
        const int lu = label[static_cast<std::size_t>(u)];
        const int lv = label[static_cast<std::size_t>(v)];
        if (lu == lv) continue;
        const double fu = lu == 1 ? a : lu == 2 ? -b : 0.0;
        const double fv = lv == 1 ? a : lv == 2 ? -b : 0.0;
        num += std::abs(fu - fv);
      }
      const double val = num / 2.0;
      if (val < best) {
        best = val;
        best_label = label;
      }
    }
    std::size_t i = 0;
    while (i < n && label[i] == 2) label[i++] = 0;
    if (i == n) break;
    ++label[i];
  }
  std::size_t np = 0, nm = 0;
  for (int l : best_label) {
    np += l == 1;
    nm += l == 2;
  }
  std::vector<double> f(n);
  for (std::size_t v = 0; v < n; ++v) {
    f[v] = best_label[v] == 1 ? 1.0 / static_cast<double>(np) : best_label[v] == 2 ? -1.0 / static_cast<double>(nm) : 0.0;
  }
  return {1.0, poincare_ratio(g, f, 1.0), PoincareMethod::brute_force, BoundDirection::exact, f};
}

double signed_pow(double x, double q) {
  if (x == 0.0) return 0.0;
  return (x > 0.0 ? 1.0 : -1.0) * (q == 0.0 ? 1.0 : q == 1.0 ? std::abs(x) : std::pow(std::abs(x), q));
}

/// Subgradient of the quotient at mean-zero f, projected to mean zero.
std::vector<double> quotient_subgradient(const Graph& g, const std::vector<double>& f, double p, double ratio) {
  const std::size_t n = g.size();
  std::vector<double> gn(n, 0.0), gd(n, 0.0);
  double den = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    den += std::pow(std::abs(f[v]), p);
    gd[v] = p * signed_pow(f[v], p - 1.0);
    for (int w : g.neighbors(static_cast<int>(v))) gn[v] += p * signed_pow(f[v] - f[static_cast<std::size_t>(w)], p - 1.0);
  }
  std::vector<double> grad(n);
  for (std::size_t v = 0; v < n; ++v) grad[v] = (gn[v] - ratio * gd[v]) / den;
  remove_mean(grad);
  return grad;
}

/// p = 2: locally optimal descent (minimise over span{f, residual, previous step}).
std::pair<double, std::vector<double>> descend_p2(const Graph& g, std::vector<double> f, int max_iterations) {
  const std::size_t n = g.size();
  std::vector<double> Lf, prev, Lb;
  laplacian_apply(g, f, Lf);
  double rho = std::inner_product(f.begin(), f.end(), Lf.begin(), 0.0);
  const double scale = std::max(1.0, 2.0 * g.max_degree());
  int stall = 0;
  for (int it = 0; it < max_iterations; ++it) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = Lf[i] - rho * f[i];
    remove_mean(r);
    const double rnorm = std::sqrt(std::inner_product(r.begin(), r.end(), r.begin(), 0.0));
    if (rnorm < 1e-14 * scale) break;
    std::vector<std::vector<double>> basis{f};
    for (auto* cand : {&r, &prev}) {
      if (cand->empty()) continue;
      std::vector<double> b = *cand;
      remove_mean(b);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) {
          const double d = std::inner_product(b.begin(), b.end(), q.begin(), 0.0);
          for (std::size_t i = 0; i < n; ++i) b[i] -= d * q[i];
        }
      }
      if (normalize(b) > 1e-12) basis.push_back(std::move(b));
    }
    const std::size_t k = basis.size();
    if (k == 1) break;
    std::vector<std::vector<double>> Lbasis(k);
    for (std::size_t a = 0; a < k; ++a) laplacian_apply(g, basis[a], Lbasis[a]);
    SymmetricMatrix small(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        small.set(a, b, std::inner_product(basis[a].begin(), basis[a].end(), Lbasis[b].begin(), 0.0));
      }
    }
    const auto ed = eigen_decomposition(small, true);
    std::vector<double> y(ed.vectors.begin(), ed.vectors.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<double> nf(n, 0.0), nLf(n, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        nf[i] += y[a] * basis[a][i];
        nLf[i] += y[a] * Lbasis[a][i];
      }
    }
    const double nn = std::sqrt(std::inner_product(nf.begin(), nf.end(), nf.begin(), 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      nf[i] /= nn;
      nLf[i] /= nn;
    }
    const double nrho = std::inner_product(nf.begin(), nf.end(), nLf.begin(), 0.0);
    if (!(nrho < rho)) {
      if (++stall > 20) break;
    } else {
      stall = 0;
    }
    prev.assign(n, 0.0);
    const double overlap = std::inner_product(nf.begin(), nf.end(), f.begin(), 0.0);
    for (std::size_t i = 0; i < n; ++i) prev[i] = nf[i] - overlap * f[i];
    if (nrho <= rho) {
      f = std::move(nf);
      Lf = std::move(nLf);
      rho = nrho;
    }
  }
  remove_mean(f);
  normalize(f);
  return {poincare_ratio(g, f, 2.0), f};
}

std::pair<double, std::vector<double>> descend_general(const Graph& g, std::vector<double> f, double p,
                                                       int max_iterations) {
  const std::size_t n = g.size();
  double ratio = poincare_ratio(g, f, p);
  double step = 0.1;
  for (int it = 0; it < max_iterations; ++it) {
    const auto grad = quotient_subgradient(g, f, p, ratio);
    const double gnorm = std::sqrt(std::inner_product(grad.begin(), grad.end(), grad.begin(), 0.0));
    if (gnorm < 1e-14) break;
    bool moved = false;
    for (int tries = 0; tries < 60; ++tries) {
      std::vector<double> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = f[i] - step * grad[i] / gnorm;
      remove_mean(cand);
      if (normalize(cand) == 0.0) {
        step *= 0.5;
        continue;
      }
      double r;
      try {
        r = poincare_ratio(g, cand, p);
      } catch (const PreconditionError&) {
        step *= 0.5;
        continue;
      }
      if (r < ratio) {
        f = std::move(cand);
        ratio = r;
        step *= 1.5;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
    step = std::max(step, 1e-12);
  }
  return {ratio, f};
}

PoincareEstimate subgradient_descent(const Graph& g, double p, const PoincareOptions& opts) {
  const std::size_t n = g.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_f;
  for (int s = 0; s < std::max(1, opts.starts); ++s) {
    SplitMix64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(s), 0x9017));
    std::vector<double> f(n);
    for (double& x : f) x = 2.0 * rng.unit() - 1.0;
    remove_mean(f);
    if (normalize(f) == 0.0) continue;
    auto [val, w] = p == 2.0 ? descend_p2(g, f, opts.max_iterations) : descend_general(g, f, p, opts.max_iterations);
    if (val < best) {
      best = val;
      best_f = std::move(w);
    }
  }
  return {p, best, PoincareMethod::subgradient_descent, BoundDirection::upper, best_f};
}

}  // namespace

PoincareEstimate poincare_constant(const Graph& g, double p, PoincareMethod method, const PoincareOptions& opts) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw PreconditionError("poincare_constant: need 1 <= p < inf");
  if (g.size() < 2) throw PreconditionError("poincare_constant: need at least 2 vertices");
  if (!g.connected()) return disconnected_estimate(g, p, method);
  switch (method) {
    case PoincareMethod::eigen_exact: return eigen_exact(g, p);
    case PoincareMethod::subset_sweep: return subset_sweep(g, p, opts);
    case PoincareMethod::subgradient_descent: return subgradient_descent(g, p, opts);
    case PoincareMethod::brute_force:
      if (p != 1.0) throw PreconditionError("brute-force is only available for p = 1");
      return brute_force_p1(g, opts);
  }
  throw PreconditionError("unknown Poincare method");
}

LipschitzReport lipschitz_displacement_check(const Graph& g, std::span<const double> f, double p, double eps) {
  if (f.size() != g.size()) throw PreconditionError("lipschitz check: function size mismatch");
  if (g.size() == 0) return {};
  double mean = 0.0, fmax = 0.0;
  for (double x : f) {
    mean += x;
    fmax = std::max(fmax, std::abs(x));
  }
  mean /= static_cast<double>(f.size());
  if (std::abs(mean) > 1e-9 * std::max(1.0, fmax)) throw PreconditionError("lipschitz check: f is not mean-zero");
  auto pw = [p](double x) { return std::pow(std::abs(x), p); };
  const double n = static_cast<double>(g.size());
  LipschitzReport r;
  double sum_f = 0.0;
  for (double x : f) sum_f += pw(x);
  double sum_df = 0.0;
  for (auto [u, v] : g.edges()) {
    const double d = std::abs(f[static_cast<std::size_t>(u)] - f[static_cast<std::size_t>(v)]);
    sum_df += 2.0 * pw(d);
    r.L = std::max(r.L, d);
  }
  r.lhs = 2.0 * eps / n * sum_f;
  r.middle = sum_df / n;
  r.rhs = static_cast<double>(g.max_degree()) * pw(r.L);
  r.holds = r.lhs <= r.middle + 1e-9 * std::max(1.0, std::abs(r.middle)) &&
            r.middle <= r.rhs + 1e-9 * std::max(1.0, std::abs(r.rhs));
  return r;
}

SpectralCheegerBound cheeger_spectral_bound(const Graph& g, std::size_t exact_cap) {
  if (g.size() < 2 || !g.connected()) throw PreconditionError("cheeger_spectral_bound: need a connected graph with 2+ vertices");
  SpectralCheegerBound b;
  b.lambda2 = spectral_gap(g);
  b.max_degree = g.max_degree();
  b.lower = b.lambda2 / (2.0 * b.max_degree);
  if (g.size() <= exact_cap) {
    b.h = cheeger_exact(g, exact_cap).h;
    b.h_exact = true;
  } else {
    SearchOptions opts;
    opts.exact_cap = exact_cap;
    b.h = cheeger_heuristic(g, opts).h;
    b.h_exact = false;
  }
  return b;
}

}  // namespace asymex
