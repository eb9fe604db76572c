#pragma once

/**
 * @file zeta.hpp
 * @brief Lefschetz zeta functions as exact products of (1 - r t^k)^e.
 *
 * Z(t) = exp(sum_n I_n t^n / n). For I = sum_k a_k sigma^k this is the finite
 * product prod_k (1 - t^k)^(-a_k); local zetas of sources add factors
 * (1 - r t^m) with r != 1. Products of such factors cover every zeta the
 * library needs, so no general rational function type is provided.
 *
 * The factors (1 - r t^k) are not pairwise coprime ((1 - t^2) = (1 - t)(1 + t)),
 * so two forms are compared by cross-multiplying numerators and denominators
 * as exact polynomials, never by comparing factor lists.
 */

#include "fpi/sequences.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpi {

/// Dense integer polynomial, coefficient i of t^i. Trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() : coefficients_{Integer(1)} {}
  explicit Polynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
  }

  const std::vector<Integer>& coefficients() const { return coefficients_; }

  /// In place multiplication by (1 - r t^k).
  void multiply_binomial(const Integer& r, Index k) {
    if (r == 0) return;
    coefficients_.resize(coefficients_.size() + k);
    for (Index i = coefficients_.size(); i-- > k;) coefficients_[i] -= r * coefficients_[i - k];
    trim();
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coefficients_.empty() || b.coefficients_.empty()) return Polynomial(std::vector<Integer>{});
    std::vector<Integer> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (Index i = 0; i < a.coefficients_.size(); ++i)
      for (Index j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(out));
  }

  bool operator==(const Polynomial&) const = default;

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<Integer> coefficients_;
};

/// Truncated formal power series with exact rational coefficients, degrees 0..N.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw std::invalid_argument("PowerSeries: needs at least degree 0");
  }

  /// The constant series 1 truncated at degree N.
  static PowerSeries one(Index degree) {
    std::vector<Rational> c(degree + 1);
    c[0] = 1;
    return PowerSeries(std::move(c));
  }

  Index degree() const { return coefficients_.size() - 1; }
  const Rational& operator[](Index i) const { return coefficients_.at(i); }
  Rational& operator[](Index i) { return coefficients_.at(i); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool operator==(const PowerSeries&) const = default;

  /// Product truncated to the smaller of the two degrees.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const Index degree = std::min(a.degree(), b.degree());
    std::vector<Rational> out(degree + 1);
    for (Index n = 0; n <= degree; ++n)
      for (Index i = 0; i <= n; ++i) out[n] += a[i] * b[n - i];
    return PowerSeries(std::move(out));
  }

 private:
  std::vector<Rational> coefficients_;
};

/// Multiset of factors (1 - r t^k)^e stored canonically: equal (r, k) pairs
/// are merged, zero exponents and r = 0 factors are dropped.
class ZetaProductForm {
 public:
  struct Key {
    std::int64_t r;
    Index k;
    auto operator<=>(const Key&) const = default;
  };
  using Factors = std::map<Key, std::int64_t>;

  ZetaProductForm() = default;

  /// Multiplies in (1 - r t^k)^e.
  ZetaProductForm& add(std::int64_t r, Index k, std::int64_t e) {
    if (k == 0) throw std::invalid_argument("ZetaProductForm: k must be positive");
    if (r == 0 || e == 0) return *this;
    auto& exponent = factors_[Key{r, k}];
    exponent += e;
    if (exponent == 0) factors_.erase(Key{r, k});
    return *this;
  }

  const Factors& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// prod (1 - r t^k)^e over factors with e > 0.
  Polynomial numerator() const { return part(+1); }
  /// prod (1 - r t^k)^|e| over factors with e < 0.
  Polynomial denominator() const { return part(-1); }

  /// Structural (factor multiset) equality. Use fpi::equals() for equality
  /// of the rational functions.
  bool operator==(const ZetaProductForm&) const = default;

 private:
  Polynomial part(int sign) const {
    Polynomial p;
    for (const auto& [key, e] : factors_) {
      if ((e > 0) != (sign > 0)) continue;
      const std::int64_t times = e > 0 ? e : -e;
      for (std::int64_t i = 0; i < times; ++i) p.multiply_binomial(Integer(key.r), key.k);
    }
    return p;
  }

  Factors factors_;
};

/// Human readable form, e.g. "(1 - t)^-1 (1 - t^3)".
inline std::string to_string(const ZetaProductForm& z) {
  if (z.empty()) return "1";
  std::string out;
  for (const auto& [key, e] : z.factors()) {
    if (!out.empty()) out += " ";
    out += "(1";
    if (key.r > 0)
      out += " - " + (key.r == 1 ? std::string() : std::to_string(key.r));
    else
      out += " + " + (key.r == -1 ? std::string() : std::to_string(-key.r));
    out += "t";
    if (key.k != 1) out += "^" + std::to_string(key.k);
    out += ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::int64_t to_exponent(const Integer& a) {
  if (a > Integer(INT32_MAX) || a < Integer(INT32_MIN))
    throw std::overflow_error("zeta exponent " + a.str() + " out of range");
  return static_cast<std::int64_t>(a);
}

/// prod_k (1 - t^k)^(-a_k).
inline ZetaProductForm zeta_from_dold(const DoldDecomposition& decomposition) {
  ZetaProductForm z;
  for (const auto& [k, a] : decomposition.coefficients()) z.add(1, k, -to_exponent(a));
  return z;
}

/// Exact expansion of the rational function up to degree N. Negative
/// exponents are expanded as geometric series in r t^k.
inline PowerSeries expand(const ZetaProductForm& z, Index degree) {
  auto series = PowerSeries::one(degree);
  for (const auto& [key, e] : z.factors()) {
    const Rational r(key.r);
    const Index k = key.k;
    if (e > 0) {
      for (std::int64_t i = 0; i < e; ++i)
        for (Index n = degree + 1; n-- > k;) series[n] -= r * series[n - k];
    } else {
      for (std::int64_t i = 0; i < -e; ++i)
        for (Index n = k; n <= degree; ++n) series[n] += r * series[n - k];
    }
  }
  return series;
}

/// exp(sum_{n<=N} I_n t^n / n) truncated at degree N, from the recurrence
/// n c_n = sum_{j=1..n} I_j c_{n-j} obtained by differentiating the exponential.
inline PowerSeries exp_series(const IndexSequence& seq) {
  const Index degree = seq.horizon();
  auto series = PowerSeries::one(degree);
  for (Index n = 1; n <= degree; ++n) {
    Rational sum = 0;
    for (Index j = 1; j <= n; ++j) sum += Rational(seq[j]) * series[n - j];
    series[n] = sum / Rational(n);
  }
  return series;
}

inline ZetaProductForm multiply(const ZetaProductForm& a, const ZetaProductForm& b) {
  ZetaProductForm out = a;
  for (const auto& [key, e] : b.factors()) out.add(key.r, key.k, e);
  return out;
}

/// Equality of the rational functions: num(a) den(b) == num(b) den(a).
inline bool equals(const ZetaProductForm& a, const ZetaProductForm& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

/// Zeta of a degree-d map of the 2-sphere: i(f^n) = 1 + d^n gives
/// 1 / ((1 - t)(1 - d t)).
inline ZetaProductForm global_zeta_sphere(std::int64_t degree) {
  ZetaProductForm z;
  z.add(1, 1, -1);
  z.add(degree, 1, -1);
  return z;
}

/// Zeta of a self-map of the closed disk: 1 / (1 - t).
inline ZetaProductForm global_zeta_disk() { return ZetaProductForm().add(1, 1, -1); }

}  // namespace fpi
