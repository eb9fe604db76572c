#pragma once

// Self-maps of a finite set J = {0..m-1}. A map phi produces the index
// sequence I_n = 1 - #Fix(phi^n), which is the general shape of the index
// sequence of an isolated planar fixed point that is neither a source nor a sink.

#include "fpi/sequences.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpi {

class FiniteMap {
 public:
  explicit FiniteMap(std::vector<Index> targets) : targets_(std::move(targets)) {
    if (targets_.empty()) throw std::invalid_argument("FiniteMap: size must be at least 1");
    for (Index t : targets_) {
      if (t >= targets_.size())
        throw std::invalid_argument("FiniteMap: target " + std::to_string(t) + " out of range 0.." +
                                    std::to_string(targets_.size() - 1));
    }
  }

  Index size() const { return targets_.size(); }
  Index operator()(Index j) const { return targets_[j]; }
  const std::vector<Index>& targets() const { return targets_; }

  bool operator==(const FiniteMap&) const = default;

 private:
  std::vector<Index> targets_;
};

/// period k -> number of k-cycles.
using OrbitCensus = std::map<Index, Index>;

/// #{j : phi^n(j) = j}, by direct n-fold iteration from every point.
inline Index fix_count(const FiniteMap& phi, Index n) {
  if (n == 0) throw std::invalid_argument("fix_count: n must be positive");
  Index count = 0;
  for (Index j = 0; j < phi.size(); ++j) {
    Index x = j;
    for (Index i = 0; i < n; ++i) x = phi(x);
    if (x == j) ++count;
  }
  return count;
}

/// The eventual image phi^m(J); it is exactly the union of the cycles.
inline std::vector<bool> eventual_image(const FiniteMap& phi) {
  const Index m = phi.size();
  std::vector<bool> in_image(m, true);
  for (Index step = 0; step < m; ++step) {
    std::vector<bool> next(m, false);
    for (Index j = 0; j < m; ++j)
      if (in_image[j]) next[phi(j)] = true;
    in_image = std::move(next);
  }
  return in_image;
}

inline OrbitCensus orbit_census(const FiniteMap& phi) {
  const auto periodic = eventual_image(phi);
  std::vector<bool> seen(phi.size(), false);
  OrbitCensus census;
  for (Index j = 0; j < phi.size(); ++j) {
    if (!periodic[j] || seen[j]) continue;
    Index length = 0;
    Index x = j;
    do {
      seen[x] = true;
      x = phi(x);
      ++length;
    } while (x != j);
    ++census[length];
  }
  return census;
}

/// I_n = 1 - #Fix(phi^n), n = 1..N.
inline IndexSequence index_sequence_of(const FiniteMap& phi, Index horizon) {
  auto seq = IndexSequence::zeros(horizon);
  for (Index n = 1; n <= horizon; ++n) seq[n] = 1 - Integer(fix_count(phi, n));
  return seq;
}

/// Disjoint union of a_k cycles of length k for every k in the certificate,
/// laid out consecutively in increasing k; each cycle sends j to j+1 and its
/// last point back to its first.
inline FiniteMap realize_from_certificate(const std::map<Index, Integer>& multiplicities) {
  if (multiplicities.empty()) throw std::invalid_argument("realize_from_certificate: F is empty");
  constexpr Index kMaxPoints = Index{1} << 24;
  std::vector<Index> targets;
  for (const auto& [k, a] : multiplicities) {
    if (k == 0) throw std::invalid_argument("realize_from_certificate: period 0");
    if (a < 1)
      throw std::invalid_argument("realize_from_certificate: multiplicity of period " +
                                  std::to_string(k) + " must be positive");
    if (a > Integer(kMaxPoints) || targets.size() + static_cast<Index>(a) * k > kMaxPoints)
      throw std::invalid_argument("realize_from_certificate: too many points");
    const auto copies = static_cast<Index>(a);
    for (Index c = 0; c < copies; ++c) {
      const Index first = targets.size();
      for (Index i = 0; i < k; ++i) targets.push_back(i + 1 < k ? first + i + 1 : first);
    }
  }
  return FiniteMap(std::move(targets));
}

inline constexpr Index kMaxEnumerationSize = 7;

/// Enumerates all m^m self-maps of {0..m-1} in lexicographic order of the
/// target list (last coordinate varies fastest).
///
///   for (MapEnumerator e(3); e; ++e) use(*e);
///
/// Ranges [begin, end) of the ordinal can be replayed independently via
/// seek(), which is how the enumeration can be split across workers.
class MapEnumerator {
 public:
  explicit MapEnumerator(Index m) : m_(m), digits_(m, 0) {
    if (m == 0) throw std::invalid_argument("MapEnumerator: m must be positive");
    if (m > kMaxEnumerationSize)
      throw std::invalid_argument("MapEnumerator: m = " + std::to_string(m) + " exceeds " +
                                  std::to_string(kMaxEnumerationSize));
    total_ = 1;
    for (Index i = 0; i < m; ++i) total_ *= m;
  }

  /// m^m.
  std::uint64_t total() const { return total_; }
  std::uint64_t ordinal() const { return ordinal_; }

  explicit operator bool() const { return ordinal_ < total_; }

  FiniteMap operator*() const { return FiniteMap(digits_); }

  MapEnumerator& operator++() {
    ++ordinal_;
    for (Index i = m_; i-- > 0;) {
      if (++digits_[i] < m_) break;
      digits_[i] = 0;
    }
    return *this;
  }

  void seek(std::uint64_t ordinal) {
    ordinal_ = ordinal;
    for (Index i = m_; i-- > 0;) {
      digits_[i] = static_cast<Index>(ordinal % m_);
      ordinal /= m_;
    }
  }

 private:
  Index m_;
  std::vector<Index> digits_;
  std::uint64_t total_ = 0;
  std::uint64_t ordinal_ = 0;
};

/// Calls fn(phi) for every self-map of {0..m-1}.
template <typename Fn>
void for_each_map(Index m, Fn&& fn) {
  for (MapEnumerator e(m); e; ++e) fn(*e);
}

}  // namespace fpi
