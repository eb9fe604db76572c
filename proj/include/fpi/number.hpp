#pragma once

// Exact integer/rational types and the small amount of elementary number
// theory the rest of the library leans on (divisors, Moebius function).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Horizons and periods are positive machine integers; values are Integer.
using Index = std::size_t;

/// All positive divisors of n in increasing order (n >= 1).
inline std::vector<Index> divisors(Index n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<Index> low, high;
  for (Index d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// Moebius function by trial division. Returns 0 if n has a square factor,
/// otherwise (-1)^(number of prime factors).
inline int mobius(Index n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (Index p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline bool divides(Index k, Index n) { return k != 0 && n % k == 0; }

/// Parses a decimal integer with optional sign. Rejects empty strings,
/// whitespace and any other stray characters.
inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text[0] == '+' ? text.substr(1) : text));
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

inline bool is_integral(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

inline Integer ipow(const Integer& base, Index exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

}  // namespace fpi
