// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace asymex {

/// Exact non-negative rational number num/den in lowest terms, den > 0.
/// Boundary ratios |∂A|/|A| are always of this form.
class Ratio {
 public:
  constexpr Ratio() noexcept = default;
  Ratio(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  /// Parses "p/q", "p" or a decimal literal such as "0.4" (exactly).
  static Ratio parse(const std::string& text);

  /// Closest rational with denominator <= max_den (continued fractions).
  static Ratio from_double(double x, std::int64_t max_den = 1'000'000'000);

  /// True when boundary <= (*this) * size, evaluated exactly.
  bool admits(std::int64_t boundary, std::int64_t size) const noexcept {
    return static_cast<__int128>(boundary) * den_ <= static_cast<__int128>(num_) * size;
  }

  /// True when boundary < (*this) * size, evaluated exactly.
  bool strictly_admits(std::int64_t boundary, std::int64_t size) const noexcept {
    return static_cast<__int128>(boundary) * den_ < static_cast<__int128>(num_) * size;
  }

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace asymex
