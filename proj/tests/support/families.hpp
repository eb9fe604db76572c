#pragma once

// Enumerated test families shared by the unit tests and the acceptance suite.

#include "fpi/portfolio.hpp"
#include "fpi/sequences.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fpi::testing {

/// Local shapes of "other" orbits used in the enumerated family.
inline std::vector<OtherOrbit> family_shapes() {
  return {OtherOrbit{{{1, 1}}}, OtherOrbit{{{2, 1}}}, OtherOrbit{{{3, 1}}}, OtherOrbit{{{2, 2}}},
          OtherOrbit{{{1, 1}, {2, 1}}}};
}

/// Every orbit spec with period <= max_period: sinks, sources of degree in
/// [-max_degree, max_degree] and the shapes above.
inline std::vector<OrbitSpec> family_orbits(Index max_period = 3, std::int64_t max_degree = 3) {
  std::vector<OrbitSpec> out;
  for (Index m = 1; m <= max_period; ++m) {
    out.emplace_back(m, Sink{});
    for (std::int64_t r = -max_degree; r <= max_degree; ++r) out.emplace_back(m, Source{r});
    for (const auto& shape : family_shapes()) out.emplace_back(m, shape);
  }
  return out;
}

inline std::vector<Ambient> family_ambients(std::int64_t max_degree = 3) {
  std::vector<Ambient> out;
  for (std::int64_t d = -max_degree; d <= max_degree; ++d) out.emplace_back(Sphere{d});
  out.emplace_back(Disk{});
  return out;
}

/// Calls fn(portfolio) for every ambient and every multiset of at most
/// max_orbits orbits from family_orbits().
template <typename Fn>
void for_each_family_portfolio(Fn&& fn, Index max_orbits = 3) {
  const auto orbits = family_orbits();
  const auto ambients = family_ambients();
  std::vector<Index> pick;
  auto recurse = [&](auto&& self, Index start) -> void {
    std::vector<OrbitSpec> chosen;
    for (Index i : pick) chosen.push_back(orbits[i]);
    for (const auto& ambient : ambients) fn(Portfolio{ambient, chosen});
    if (pick.size() == max_orbits) return;
    for (Index i = start; i < orbits.size(); ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
}

/// Random sparse integer decomposition: up to max_keys keys in 1..horizon,
/// values in [-max_value, max_value] \ {0}.
inline DoldDecomposition random_decomposition(std::mt19937_64& rng, Index horizon, Index max_keys = 4,
                                              std::int64_t max_value = 3) {
  std::uniform_int_distribution<Index> key_count(0, max_keys);
  std::uniform_int_distribution<Index> key(1, horizon);
  std::uniform_int_distribution<std::int64_t> value(1, max_value);
  std::bernoulli_distribution negative(0.5);
  DoldDecomposition d(horizon);
  const Index keys = key_count(rng);
  for (Index i = 0; i < keys; ++i) {
    const std::int64_t v = value(rng);
    d.set(key(rng), negative(rng) ? -v : v);
  }
  return d;
}

}  // namespace fpi::testing
