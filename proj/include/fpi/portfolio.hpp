#pragma once

/**
 * @file portfolio.hpp
 * @brief Periodic orbit portfolios of self-maps of S^2 and D^2.
 *
 * A portfolio is a symbolic model of the complete (finite) set of periodic
 * orbits of a map, each orbit isolated as an invariant set and tagged as a
 * sink, a source of given degree, or "other" (neither). Its zeta function is
 * the product of the local zetas of its orbits and must equal the global
 * zeta of the ambient space:
 *
 *   S^2, degree d:  1 / ((1 - t)(1 - d t))        D^2:  1 / (1 - t)
 *
 * Orbit classes used by the structural rules:
 *   A   sinks and degree-1 sources
 *   S   sources of degree r with |r| >= 2
 *   S'  sources of degree -1
 *   H   orbits that are neither sinks nor sources
 * Degree-0 sources belong to none of these and have local zeta 1.
 */

#include "fpi/zeta.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace fpi {

struct Sink {
  bool operator==(const Sink&) const = default;
};

/// Source of degree r: i(f^n, p) = r^n.
struct Source {
  std::int64_t degree = 0;
  bool operator==(const Source&) const = default;
};

/// Neither sink nor source. The local sequence (of f^m at an orbit point) is
/// sigma^1 - sum_i b_i sigma^{k_i}; shape holds the pairs (k_i, b_i).
struct OtherOrbit {
  std::vector<std::pair<Index, Index>> shape;
  bool operator==(const OtherOrbit&) const = default;
};

using OrbitKind = std::variant<Sink, Source, OtherOrbit>;

struct OrbitSpec {
  Index period = 1;
  OrbitKind kind;

  OrbitSpec(Index m, OrbitKind k) : period(m), kind(std::move(k)) {
    if (period == 0) throw std::invalid_argument("OrbitSpec: period must be positive");
    if (const auto* other = std::get_if<OtherOrbit>(&kind)) {
      if (other->shape.empty()) throw std::invalid_argument("OrbitSpec: empty local shape");
      for (const auto& [k_i, b_i] : other->shape)
        if (k_i == 0 || b_i == 0)
          throw std::invalid_argument("OrbitSpec: local shape entries must be positive");
    }
  }

  bool is_sink() const { return std::holds_alternative<Sink>(kind); }
  bool is_other() const { return std::holds_alternative<OtherOrbit>(kind); }
  std::optional<std::int64_t> source_degree() const {
    if (const auto* s = std::get_if<Source>(&kind)) return s->degree;
    return std::nullopt;
  }

  bool in_A() const { return is_sink() || source_degree() == 1; }
  bool in_S() const {
    auto r = source_degree();
    return r && (*r < -1 || *r > 1);
  }
  bool in_S_prime() const { return source_degree() == -1; }
  bool in_H() const { return is_other(); }

  bool operator==(const OrbitSpec&) const = default;
};

struct Sphere {
  std::int64_t degree = 0;
  bool operator==(const Sphere&) const = default;
};
struct Disk {
  bool operator==(const Disk&) const = default;
};
using Ambient = std::variant<Sphere, Disk>;

struct Portfolio {
  Ambient ambient;
  std::vector<OrbitSpec> orbits;

  /// Degree of the ambient map; a disk map counts as degree 0.
  std::int64_t degree() const {
    if (const auto* s = std::get_if<Sphere>(&ambient)) return s->degree;
    return 0;
  }
  bool on_sphere() const { return std::holds_alternative<Sphere>(ambient); }
};

// Local and global zetas ------------------------------------------------------

/// Sink: 1/(1 - t^m). Source(r): 1/(1 - r t^m).
/// Other: prod_i (1 - t^{k_i m})^{b_i} / (1 - t^m).
inline ZetaProductForm local_zeta(const OrbitSpec& orbit) {
  const Index m = orbit.period;
  ZetaProductForm z;
  std::visit(
      [&](const auto& kind) {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, Sink>) {
          z.add(1, m, -1);
        } else if constexpr (std::is_same_v<K, Source>) {
          z.add(kind.degree, m, -1);
        } else {
          z.add(1, m, -1);
          for (const auto& [k, b] : kind.shape) z.add(1, k * m, static_cast<std::int64_t>(b));
        }
      },
      orbit.kind);
  return z;
}

inline ZetaProductForm portfolio_zeta(const Portfolio& p) {
  ZetaProductForm z;
  for (const auto& orbit : p.orbits) z = multiply(z, local_zeta(orbit));
  return z;
}

inline ZetaProductForm global_zeta(const Ambient& ambient) {
  if (const auto* s = std::get_if<Sphere>(&ambient)) return global_zeta_sphere(s->degree);
  return global_zeta_disk();
}

/// True iff the portfolio can be the complete set of periodic orbits, i.e.
/// the product of local zetas equals the global zeta of the ambient.
inline bool check_consistency(const Portfolio& p) {
  return equals(portfolio_zeta(p), global_zeta(p.ambient));
}

// Structural rules -------------------------------------------------------------

struct StructuralReport {
  /// Rules are evaluated assuming the portfolio lists every periodic orbit
  /// and that there are finitely many.
  static constexpr const char* kAssumption =
      "assumes the portfolio is the complete, finite set of periodic orbits";

  std::vector<int> violated;  // subset of {1, 2, 3}
  std::vector<std::string> details;

  bool ok() const { return violated.empty(); }
};

struct OrbitClassCounts {
  Index A = 0, S = 0, S_prime = 0, H = 0, degree_zero = 0;
};

inline OrbitClassCounts classify_orbits(const Portfolio& p) {
  OrbitClassCounts c;
  for (const auto& o : p.orbits) {
    if (o.in_A()) ++c.A;
    else if (o.in_S()) ++c.S;
    else if (o.in_S_prime()) ++c.S_prime;
    else if (o.in_H()) ++c.H;
    else ++c.degree_zero;
  }
  return c;
}

namespace detail {

inline bool has_other_orbit_of_period(const Portfolio& p, Index self, Index period) {
  for (Index j = 0; j < p.orbits.size(); ++j)
    if (j != self && p.orbits[j].period == period) return true;
  return false;
}

inline bool has_reversing_source_of_period(const Portfolio& p, Index period) {
  for (const auto& o : p.orbits)
    if (o.in_S_prime() && o.period == period) return true;
  return false;
}

}  // namespace detail

/// Rules that every complete finite portfolio must satisfy:
///  (1) #S <= 1, and an S element forces S^2 of degree d, |d| >= 1, with the
///      element a fixed source of degree exactly d;
///  (2) #A >= 1, and #A >= 2 on S^2 with degree 1;
///  (3) each degree -1 source of period m has another orbit of period m, or
///      m is even and there is a degree -1 source of period m/2.
inline StructuralReport structural_checks(const Portfolio& p) {
  StructuralReport report;
  const auto counts = classify_orbits(p);

  bool item1 = counts.S <= 1;
  if (!item1) report.details.push_back("#S = " + std::to_string(counts.S) + " > 1");
  if (counts.S == 1) {
    const auto& s = *std::find_if(p.orbits.begin(), p.orbits.end(), [](const OrbitSpec& o) { return o.in_S(); });
    const std::int64_t d = p.degree();
    if (!p.on_sphere() || d == 0 || s.period != 1 || *s.source_degree() != d) {
      item1 = false;
      report.details.push_back("S element (period " + std::to_string(s.period) + ", degree " +
                               std::to_string(*s.source_degree()) + ") is not a fixed source of the map degree");
    }
  }
  if (!item1) report.violated.push_back(1);

  const Index needed_A = (p.on_sphere() && p.degree() == 1) ? 2 : 1;
  if (counts.A < needed_A) {
    report.violated.push_back(2);
    report.details.push_back("#A = " + std::to_string(counts.A) + " < " + std::to_string(needed_A));
  }

  bool item3 = true;
  for (Index i = 0; i < p.orbits.size(); ++i) {
    const auto& o = p.orbits[i];
    if (!o.in_S_prime()) continue;
    const Index m = o.period;
    if (detail::has_other_orbit_of_period(p, i, m)) continue;
    if (m % 2 == 0 && detail::has_reversing_source_of_period(p, m / 2)) continue;
    item3 = false;
    report.details.push_back("degree -1 source of period " + std::to_string(m) + " is unmatched");
  }
  if (!item3) report.violated.push_back(3);
  return report;
}

enum class InfinitudeTrigger {
  kTwoExpandingSources,       // #S >= 2
  kMisplacedExpandingSource,  // S element not fixed, or its degree differs from the map degree
  kTooFewAttractors,          // A empty, or a single orbit for a degree-1 sphere map
  kUnmatchedOddReversingSource,
  kUnmatchedEvenReversingSource,
};

inline const char* describe(InfinitudeTrigger t) {
  switch (t) {
    case InfinitudeTrigger::kTwoExpandingSources:
      return "#S >= 2";
    case InfinitudeTrigger::kMisplacedExpandingSource:
      return "the S element is not a fixed point or its degree differs from the map degree";
    case InfinitudeTrigger::kTooFewAttractors:
      return "A is empty, or contains one orbit and the sphere map has degree 1";
    case InfinitudeTrigger::kUnmatchedOddReversingSource:
      return "degree -1 source of odd period m with no other m-periodic orbit";
    case InfinitudeTrigger::kUnmatchedEvenReversingSource:
      return "degree -1 source of even period m with no other m-periodic orbit and no degree -1 source of period m/2";
  }
  return "";
}

/// Conditions under which a map whose listed orbits are all its isolated
/// periodic orbits must in fact have infinitely many periodic orbits. Any
/// trigger means the portfolio cannot describe a map with finitely many.
inline std::vector<InfinitudeTrigger> infinitude_triggers(const Portfolio& p) {
  std::vector<InfinitudeTrigger> out;
  const auto counts = classify_orbits(p);
  if (counts.S >= 2) out.push_back(InfinitudeTrigger::kTwoExpandingSources);
  if (counts.S == 1) {
    const auto& s = *std::find_if(p.orbits.begin(), p.orbits.end(), [](const OrbitSpec& o) { return o.in_S(); });
    if (s.period != 1 || *s.source_degree() != p.degree())
      out.push_back(InfinitudeTrigger::kMisplacedExpandingSource);
  }
  if (counts.A == 0 || (counts.A == 1 && p.on_sphere() && p.degree() == 1))
    out.push_back(InfinitudeTrigger::kTooFewAttractors);

  bool odd = false, even = false;
  for (Index i = 0; i < p.orbits.size(); ++i) {
    const auto& o = p.orbits[i];
    if (!o.in_S_prime()) continue;
    const Index m = o.period;
    if (detail::has_other_orbit_of_period(p, i, m)) continue;
    if (m % 2 == 1)
      odd = true;
    else if (!detail::has_reversing_source_of_period(p, m / 2))
      even = true;
  }
  if (odd) out.push_back(InfinitudeTrigger::kUnmatchedOddReversingSource);
  if (even) out.push_back(InfinitudeTrigger::kUnmatchedEvenReversingSource);
  return out;
}

// Lefschetz numbers and growth ------------------------------------------------

/// i(f^n, x) at a point x of the orbit, given the orbit period divides n.
inline Integer orbit_point_index(const OrbitSpec& orbit, Index n) {
  const Index j = n / orbit.period;
  return std::visit(
      [&](const auto& kind) -> Integer {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, Sink>) {
          return 1;
        } else if constexpr (std::is_same_v<K, Source>) {
          return ipow(Integer(kind.degree), j);
        } else {
          Integer value = 1;
          for (const auto& [k, b] : kind.shape)
            if (j % k == 0) value -= Integer(k) * Integer(b);
          return value;
        }
      },
      orbit.kind);
}

/// Sum of the fixed point indices of f^n over all listed orbits: an orbit of
/// period m | n contributes m times the index at one of its points. Only
/// meaningful (equal to the Lefschetz number) for consistent portfolios.
inline Integer lefschetz_fixed_point_sum(const Portfolio& p, Index n) {
  if (n == 0) throw std::invalid_argument("lefschetz_fixed_point_sum: n must be positive");
  if (!check_consistency(p))
    throw std::invalid_argument("lefschetz_fixed_point_sum: portfolio is inconsistent with its ambient");
  Integer sum = 0;
  for (const auto& orbit : p.orbits)
    if (n % orbit.period == 0) sum += Integer(orbit.period) * orbit_point_index(orbit, n);
  return sum;
}

struct GrowthBound {
  std::int64_t degree = 0;
  Index n = 1;
  Integer bound;  // 1 + d^n, lower bound on the number of fixed points of f^n
  /// d^n < 0: the bound says nothing beyond N_n >= 0.
  bool vacuous = false;
  /// (1/n) ln(max(1, bound)) >= ln|d|, evaluated when |d| >= 2.
  std::optional<bool> rate_holds;
};

/// N_n(f) >= 1 + d^n for a degree-d sphere map whose periodic orbits are all
/// isolated and which has no source of degree |r| > 1.
inline GrowthBound growth_lower_bound(std::int64_t degree, Index n) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  if (n == 0) throw std::invalid_argument("growth_lower_bound: n must be positive");
  GrowthBound g;
  g.degree = degree;
  g.n = n;
  const Integer power = ipow(Integer(degree), n);
  g.bound = 1 + power;
  g.vacuous = power < 0;
  if (degree <= -2 || degree >= 2) {
    const Float clipped = g.bound > 1 ? Float(g.bound) : Float(1);
    const Float rate = log(clipped) / Float(n);
    g.rate_holds = rate >= log(Float(degree < 0 ? -degree : degree));
  }
  return g;
}

}  // namespace fpi
