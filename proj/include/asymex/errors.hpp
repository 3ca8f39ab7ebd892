// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asymex {

/// Caller violated a documented precondition (bad shape, bad range, A not in Y...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact enumeration was requested on an input above the configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t size, std::size_t cap)
      : std::runtime_error("exact enumeration needs " + std::to_string(size) +
                           " points but the exact-size cap is " + std::to_string(cap) +
                           "; use heuristic mode or raise the cap"),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// Malformed graph file, manifest or report.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver stopped before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A generator exhausted its retry budget.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, double best_gap)
      : std::runtime_error(what + " (best spectral gap " + std::to_string(best_gap) + ")"),
        best_gap_(best_gap) {}

  double best_gap() const noexcept { return best_gap_; }

 private:
  double best_gap_;
};

/// A checked mathematical bound failed. Never expected on valid inputs.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Re-certification of a rebuilt exhaustion failed at block n, level k.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(std::size_t n, std::size_t k, const std::string& what)
      : std::runtime_error(what + " (block " + std::to_string(n) + ", level " + std::to_string(k) + ")"), n_(n), k_(k) {}

  std::size_t block() const noexcept { return n_; }
  std::size_t level() const noexcept { return k_; }

 private:
  std::size_t n_;
  std::size_t k_;
};

}  // namespace asymex
