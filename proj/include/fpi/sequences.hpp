#pragma once

/**
 * @file sequences.hpp
 * @brief Exact algebra of fixed point index sequences.
 *
 * A fixed point index sequence I = {I_n} is handled as a finite prefix
 * n = 1..N (the horizon). Every such sequence is written uniquely as
 *
 *     I = sum_k a_k sigma^k,     sigma^k_n = k if k | n, else 0,
 *
 * with rational a_k; the a_k are all integers exactly when I satisfies
 * Dold's congruences. Sequences of isolated planar fixed points that are
 * neither sources nor sinks have the shape sigma^1 - sum_{k in F} a_k sigma^k
 * with F non-empty and a_k >= 1; check_admissible() tests for that shape.
 *
 * All verdicts hold "up to horizon N" and nothing is extrapolated.
 */

#include "fpi/number.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpi {

inline constexpr Index kDefaultHorizon = 24;

/// Terms I_1..I_N of an index sequence.
class IndexSequence {
 public:
  explicit IndexSequence(std::vector<Integer> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("IndexSequence: horizon must be at least 1");
  }

  static IndexSequence zeros(Index horizon) {
    if (horizon == 0) throw std::invalid_argument("IndexSequence: horizon must be at least 1");
    return IndexSequence(std::vector<Integer>(horizon));
  }

  Index horizon() const { return terms_.size(); }

  /// 1-based access, I_n.
  const Integer& operator[](Index n) const { return terms_.at(n - 1); }
  Integer& operator[](Index n) { return terms_.at(n - 1); }

  const std::vector<Integer>& terms() const { return terms_; }

  bool operator==(const IndexSequence&) const = default;

  IndexSequence& operator+=(const IndexSequence& other) {
    require_same_horizon(other);
    for (Index i = 0; i < terms_.size(); ++i) terms_[i] += other.terms_[i];
    return *this;
  }
  IndexSequence& operator-=(const IndexSequence& other) {
    require_same_horizon(other);
    for (Index i = 0; i < terms_.size(); ++i) terms_[i] -= other.terms_[i];
    return *this;
  }
  IndexSequence& operator*=(const Integer& factor) {
    for (auto& t : terms_) t *= factor;
    return *this;
  }

  friend IndexSequence operator+(IndexSequence a, const IndexSequence& b) { return a += b; }
  friend IndexSequence operator-(IndexSequence a, const IndexSequence& b) { return a -= b; }
  friend IndexSequence operator*(const Integer& c, IndexSequence a) { return a *= c; }

 private:
  void require_same_horizon(const IndexSequence& other) const {
    if (other.horizon() != horizon())
      throw std::invalid_argument("IndexSequence: horizon mismatch");
  }

  std::vector<Integer> terms_;
};

/// Sparse coefficients k -> a_k of I = sum a_k sigma^k, with the horizon
/// they were computed at. Zero coefficients are never stored.
class DoldDecomposition {
 public:
  using Map = std::map<Index, Integer>;

  explicit DoldDecomposition(Index horizon, Map coefficients = {}) : horizon_(horizon) {
    if (horizon == 0) throw std::invalid_argument("DoldDecomposition: horizon must be at least 1");
    for (auto& [k, a] : coefficients) set(k, std::move(a));
  }

  Index horizon() const { return horizon_; }
  const Map& coefficients() const { return coefficients_; }

  Integer at(Index k) const {
    auto it = coefficients_.find(k);
    return it == coefficients_.end() ? Integer(0) : it->second;
  }

  void set(Index k, Integer value) {
    if (k == 0 || k > horizon_)
      throw std::invalid_argument("DoldDecomposition: key " + std::to_string(k) + " outside 1.." +
                                  std::to_string(horizon_));
    if (value == 0)
      coefficients_.erase(k);
    else
      coefficients_[k] = std::move(value);
  }

  bool operator==(const DoldDecomposition&) const = default;

  friend DoldDecomposition operator+(const DoldDecomposition& a, const DoldDecomposition& b) {
    if (a.horizon_ != b.horizon_) throw std::invalid_argument("DoldDecomposition: horizon mismatch");
    DoldDecomposition out = a;
    for (const auto& [k, v] : b.coefficients_) out.set(k, out.at(k) + v);
    return out;
  }

 private:
  Index horizon_;
  Map coefficients_;
};

/// Raised when the triangular recursion produces a non-integral a_k, i.e.
/// the input violates Dold's congruences at n = k.
class NonIntegralCoefficient : public std::domain_error {
 public:
  NonIntegralCoefficient(Index k, Rational value)
      : std::domain_error("non-integral Dold coefficient a_" + std::to_string(k) + " = " +
                          fpi::to_string(value)),
        k_(k),
        value_(std::move(value)) {}

  Index k() const { return k_; }
  const Rational& value() const { return value_; }

 private:
  Index k_;
  Rational value_;
};

/// sigma^k truncated to the horizon.
inline IndexSequence sigma(Index k, Index horizon) {
  if (k == 0) throw std::invalid_argument("sigma: k must be positive");
  auto seq = IndexSequence::zeros(horizon);
  for (Index n = k; n <= horizon; n += k) seq[n] = k;
  return seq;
}

/// Solves I_n = sum_{k | n} k a_k for n = 1..N by the triangular recursion
///   a_n = (I_n - sum_{k | n, k < n} k a_k) / n.
/// Throws NonIntegralCoefficient at the first n whose a_n is not an integer.
inline DoldDecomposition dold_coefficients(const IndexSequence& seq) {
  const Index horizon = seq.horizon();
  std::vector<Integer> a(horizon + 1);
  for (Index n = 1; n <= horizon; ++n) {
    Integer rest = seq[n];
    for (Index k : divisors(n)) {
      if (k == n) break;
      rest -= Integer(k) * a[k];
    }
    Integer q, r;
    boost::multiprecision::divide_qr(rest, Integer(n), q, r);
    if (r != 0) throw NonIntegralCoefficient(n, Rational(rest, Integer(n)));
    a[n] = std::move(q);
  }
  DoldDecomposition out(horizon);
  for (Index k = 1; k <= horizon; ++k) out.set(k, std::move(a[k]));
  return out;
}

/// I_n = sum_{k | n} k a_k. Keys beyond the horizon contribute nothing.
inline IndexSequence from_dold(const DoldDecomposition::Map& coefficients, Index horizon) {
  auto seq = IndexSequence::zeros(horizon);
  for (const auto& [k, a] : coefficients) {
    if (k == 0) throw std::invalid_argument("from_dold: key 0");
    for (Index n = k; n <= horizon; n += k) seq[n] += Integer(k) * a;
  }
  return seq;
}

inline IndexSequence from_dold(const DoldDecomposition& decomposition, Index horizon) {
  return from_dold(decomposition.coefficients(), horizon);
}

struct CongruenceReport {
  Index horizon = 0;
  std::vector<Index> violations;  // n with sum_{d|n} mu(n/d) I_d != 0 (mod n)

  bool passed() const { return violations.empty(); }
};

/// Checks n | sum_{d | n} mu(n/d) I_d for every n up to the horizon. This goes
/// through Moebius inversion, not through dold_coefficients(), so the two can
/// be checked against each other.
inline CongruenceReport check_dold_congruences(const IndexSequence& seq) {
  CongruenceReport report{seq.horizon(), {}};
  for (Index n = 1; n <= seq.horizon(); ++n) {
    Integer sum = 0;
    for (Index d : divisors(n)) {
      int mu = mobius(n / d);
      if (mu == 1)
        sum += seq[d];
      else if (mu == -1)
        sum -= seq[d];
    }
    if (sum % Integer(n) != 0) report.violations.push_back(n);
  }
  return report;
}

/// Verdict of the sigma^1 - sum_{k in F} a_k sigma^k shape test.
struct AdmissibilityCertificate {
  bool admissible = false;
  std::set<Index> F;
  std::map<Index, Integer> multiplicities;  // k -> a_k >= 1
  Index horizon = 0;                        // verdict valid for n <= horizon
  std::string reason;                       // empty when admissible
};

/// Tests whether the sequence is sigma^1 - sum_{k in F} a_k sigma^k with F
/// non-empty and every a_k a positive integer, on 1..N.
///
/// With c_k the Dold coefficients, this requires c_1 <= 1, c_k <= 0 for k >= 2,
/// and at least one of (1 - c_1 >= 1, some c_k < 0). The multiplicities are
/// a_1 = 1 - c_1 and a_k = -c_k.
inline AdmissibilityCertificate check_admissible(const IndexSequence& seq) {
  AdmissibilityCertificate cert;
  cert.horizon = seq.horizon();

  std::optional<DoldDecomposition> decomposition;
  try {
    decomposition = dold_coefficients(seq);
  } catch (const NonIntegralCoefficient& e) {
    cert.reason = "Dold congruence violated at n = " + std::to_string(e.k());
    return cert;
  }

  const Integer c1 = decomposition->at(1);
  if (c1 > 1) {
    cert.reason = "coefficient of sigma^1 is " + c1.str() + " > 1";
    return cert;
  }
  if (c1 < 1) {
    cert.F.insert(1);
    cert.multiplicities[1] = 1 - c1;
  }
  for (const auto& [k, c] : decomposition->coefficients()) {
    if (k == 1) continue;
    if (c > 0) {
      cert.F.clear();
      cert.multiplicities.clear();
      cert.reason = "coefficient of sigma^" + std::to_string(k) + " is " + c.str() + " > 0";
      return cert;
    }
    cert.F.insert(k);
    cert.multiplicities[k] = -c;
  }
  if (cert.F.empty()) {
    cert.reason = "F is empty: the sequence is sigma^1 (sink-like)";
    return cert;
  }
  cert.admissible = true;
  return cert;
}

/// Smallest q <= N/2 with I_{n+q} = I_n for all n <= N - q. Only a heuristic:
/// it says nothing about terms past the horizon.
inline std::optional<Index> detect_period(const IndexSequence& seq) {
  const Index horizon = seq.horizon();
  for (Index q = 1; q <= horizon / 2; ++q) {
    bool periodic = true;
    for (Index n = 1; n + q <= horizon && periodic; ++n) periodic = seq[n + q] == seq[n];
    if (periodic) return q;
  }
  return std::nullopt;
}

}  // namespace fpi
