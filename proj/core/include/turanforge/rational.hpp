#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace turanforge {

/// Exact rational used for every density and threshold comparison.
using Rational = boost::rational<std::int64_t>;

/// Accepts "p/q", integers, and finite decimals ("0.05" -> 1/20).
/// Throws ArgumentError on anything else.
Rational parse_rational(std::string_view text);

/// Always "p/q" in lowest terms, including "0/1" and "1/1".
std::string to_string(const Rational& r);

double to_double(const Rational& r) noexcept;

inline Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace turanforge
