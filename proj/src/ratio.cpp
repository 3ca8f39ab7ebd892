// SPDX-License-Identifier: Apache-2.0
#include "asymex/ratio.hpp"

#include <cmath>
#include <numeric>

#include "asymex/errors.hpp"

namespace asymex {

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("Ratio: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw PreconditionError("Ratio: negative value");
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Ratio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      return Ratio(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Ratio(std::stoll(text), 1);
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 17) return from_double(std::stod(text));
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : std::stoll(whole);
    const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    return Ratio(w * scale + f, scale);
  } catch (const std::logic_error&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

Ratio Ratio::from_double(double x, std::int64_t max_den) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw PreconditionError("Ratio::from_double: need finite x >= 0");
  // Continued-fraction convergents h/k.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(rem);
    if (a_real > 4e18) break;
    const auto a = static_cast<std::int64_t>(a_real);
    const __int128 h2 = static_cast<__int128>(a) * h1 + h0;
    const __int128 k2 = static_cast<__int128>(a) * k1 + k0;
    if (k2 > max_den || h2 > static_cast<__int128>(4e18)) break;
    h0 = h1;
    h1 = static_cast<std::int64_t>(h2);
    k0 = k1;
    k1 = static_cast<std::int64_t>(k2);
    const double frac = rem - a_real;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= 1e-15 * std::max(1.0, x) || frac < 1e-18) {
      break;
    }
    rem = 1.0 / frac;
  }
  if (k1 == 0) return Ratio(0, 1);
  return Ratio(h1, k1);
}

}  // namespace asymex
