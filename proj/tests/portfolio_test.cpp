#include "fpi/portfolio.hpp"
#include "support/families.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace {

using namespace fpi;

OrbitSpec sink(Index m) { return OrbitSpec(m, Sink{}); }
OrbitSpec source(Index m, std::int64_t r) { return OrbitSpec(m, Source{r}); }
OrbitSpec other(Index m, std::vector<std::pair<Index, Index>> shape) { return OrbitSpec(m, OtherOrbit{std::move(shape)}); }

bool has(const std::vector<InfinitudeTrigger>& triggers, InfinitudeTrigger t) {
  return std::find(triggers.begin(), triggers.end(), t) != triggers.end();
}

TEST(OrbitSpec, Validation) {
  EXPECT_THROW(OrbitSpec(0, Sink{}), std::invalid_argument);
  EXPECT_THROW(other(1, {}), std::invalid_argument);
  EXPECT_THROW(other(1, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(other(1, {{2, 0}}), std::invalid_argument);
}

TEST(OrbitSpec, Classes) {
  EXPECT_TRUE(sink(2).in_A());
  EXPECT_TRUE(source(1, 1).in_A());
  EXPECT_TRUE(source(1, -2).in_S());
  EXPECT_TRUE(source(1, -1).in_S_prime());
  EXPECT_TRUE(other(1, {{2, 1}}).in_H());
  const auto zero = source(1, 0);
  EXPECT_FALSE(zero.in_A() || zero.in_S() || zero.in_S_prime() || zero.in_H());
  EXPECT_TRUE(local_zeta(zero).empty());
}

TEST(LocalZeta, Examples) {
  EXPECT_EQ(local_zeta(sink(2)), ZetaProductForm().add(1, 2, -1));
  EXPECT_EQ(local_zeta(source(1, 3)), ZetaProductForm().add(3, 1, -1));
  EXPECT_EQ(local_zeta(other(2, {{3, 1}})), ZetaProductForm().add(1, 2, -1).add(1, 6, 1));
}

TEST(LocalZeta, OtherAtPeriodOneIsDoldZeta) {
  for (const auto& shape : fpi::testing::family_shapes()) {
    DoldDecomposition::Map d{{1, 1}};
    for (const auto& [k, b] : shape.shape) d[k] -= Integer(b);
    EXPECT_TRUE(equals(local_zeta(OrbitSpec(1, shape)), zeta_from_dold(DoldDecomposition(24, d))));
  }
}

TEST(LocalZeta, ExpansionMatchesOrbitPointIndices) {
  // Z = exp(sum_n m i(f^n) t^n / n) over n divisible by m.
  for (const auto& orbit : fpi::testing::family_orbits()) {
    auto I = IndexSequence::zeros(12);
    for (Index n = orbit.period; n <= 12; n += orbit.period) I[n] = Integer(orbit.period) * orbit_point_index(orbit, n);
    EXPECT_EQ(expand(local_zeta(orbit), 12), exp_series(I));
  }
}

TEST(PortfolioZeta, Examples) {
  const Portfolio p{Sphere{2}, {sink(1), source(1, 2)}};
  EXPECT_TRUE(equals(portfolio_zeta(p), global_zeta_sphere(2)));
  EXPECT_TRUE(portfolio_zeta(Portfolio{Disk{}, {}}).empty());
}

TEST(PortfolioZeta, PermutationInvariant) {
  std::mt19937_64 rng(47);
  const auto orbits = fpi::testing::family_orbits();
  std::uniform_int_distribution<Index> pick(0, orbits.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Portfolio p{Sphere{2}, {}};
    for (int i = 0; i < 4; ++i) p.orbits.push_back(orbits[pick(rng)]);
    auto q = p;
    std::shuffle(q.orbits.begin(), q.orbits.end(), rng);
    EXPECT_TRUE(equals(portfolio_zeta(p), portfolio_zeta(q)));
    EXPECT_EQ(check_consistency(p), check_consistency(q));
    EXPECT_EQ(structural_checks(p).violated, structural_checks(q).violated);
    EXPECT_EQ(infinitude_triggers(p), infinitude_triggers(q));
  }
}

TEST(Consistency, Examples) {
  EXPECT_TRUE(check_consistency(Portfolio{Sphere{2}, {sink(1), source(1, 2)}}));
  EXPECT_FALSE(check_consistency(Portfolio{Sphere{2}, {source(1, 2)}}));
  EXPECT_TRUE(check_consistency(Portfolio{Disk{}, {sink(1)}}));
  EXPECT_TRUE(check_consistency(Portfolio{Sphere{-1}, {sink(1), source(1, -1)}}));
  EXPECT_TRUE(check_consistency(Portfolio{Sphere{0}, {sink(1)}}));
  EXPECT_FALSE(check_consistency(Portfolio{Disk{}, {}}));
}

TEST(Structural, Examples) {
  const auto good = structural_checks(Portfolio{Sphere{2}, {sink(1), source(1, 2)}});
  EXPECT_TRUE(good.ok());

  const auto wrong_degree = structural_checks(Portfolio{Sphere{2}, {source(1, 3), sink(1)}});
  EXPECT_EQ(wrong_degree.violated, (std::vector<int>{1}));
  EXPECT_FALSE(check_consistency(Portfolio{Sphere{2}, {source(1, 3), sink(1)}}));

  const auto degree_one = structural_checks(Portfolio{Sphere{1}, {sink(1)}});
  EXPECT_EQ(degree_one.violated, (std::vector<int>{2}));

  EXPECT_EQ(structural_checks(Portfolio{Sphere{2}, {source(1, 2)}}).violated, (std::vector<int>{2}));
  EXPECT_EQ(structural_checks(Portfolio{Disk{}, {sink(1), source(1, 2)}}).violated, (std::vector<int>{1}));
}

TEST(Structural, ReversingSourceMatching) {
  EXPECT_EQ(structural_checks(Portfolio{Disk{}, {sink(1), source(3, -1)}}).violated, (std::vector<int>{3}));
  EXPECT_TRUE(structural_checks(Portfolio{Disk{}, {sink(1), source(3, -1), sink(3)}}).ok());
  EXPECT_TRUE(structural_checks(Portfolio{Disk{}, {sink(1), source(2, -1), source(1, -1)}}).ok());
  EXPECT_EQ(structural_checks(Portfolio{Disk{}, {sink(1), source(2, -1)}}).violated, (std::vector<int>{3}));
}

TEST(Infinitude, Examples) {
  const auto lone_sink = infinitude_triggers(Portfolio{Sphere{1}, {sink(1)}});
  EXPECT_EQ(lone_sink, (std::vector<InfinitudeTrigger>{InfinitudeTrigger::kTooFewAttractors}));

  const auto two = infinitude_triggers(Portfolio{Sphere{2}, {source(1, 2), source(2, 3), sink(1)}});
  EXPECT_TRUE(has(two, InfinitudeTrigger::kTwoExpandingSources));

  EXPECT_TRUE(infinitude_triggers(Portfolio{Sphere{2}, {sink(1), source(1, 2)}}).empty());

  const auto misplaced = infinitude_triggers(Portfolio{Sphere{3}, {sink(1), source(2, 3)}});
  EXPECT_EQ(misplaced, (std::vector<InfinitudeTrigger>{InfinitudeTrigger::kMisplacedExpandingSource}));

  EXPECT_EQ(infinitude_triggers(Portfolio{Disk{}, {sink(1), source(3, -1)}}),
            (std::vector<InfinitudeTrigger>{InfinitudeTrigger::kUnmatchedOddReversingSource}));
  EXPECT_EQ(infinitude_triggers(Portfolio{Disk{}, {sink(1), source(2, -1)}}),
            (std::vector<InfinitudeTrigger>{InfinitudeTrigger::kUnmatchedEvenReversingSource}));
  // A period-one reversing source matches its double.
  EXPECT_TRUE(infinitude_triggers(Portfolio{Disk{}, {sink(1), source(2, -1), source(1, -1)}}).empty());
  for (auto t : two) EXPECT_NE(std::string(describe(t)), "");
}

TEST(Infinitude, DisjointFromConsistentFamilyPortfolios) {
  std::size_t consistent = 0;
  fpi::testing::for_each_family_portfolio([&](const Portfolio& p) {
    if (!check_consistency(p)) return;
    ++consistent;
    ASSERT_TRUE(infinitude_triggers(p).empty());
    ASSERT_TRUE(structural_checks(p).ok());
  });
  EXPECT_GT(consistent, 0u);
}

TEST(LefschetzSum, Examples) {
  EXPECT_EQ(lefschetz_fixed_point_sum(Portfolio{Sphere{2}, {sink(1), source(1, 2)}}, 5), 33);
  EXPECT_EQ(lefschetz_fixed_point_sum(Portfolio{Disk{}, {sink(1)}}, 9), 1);
  const Portfolio flip{Sphere{-1}, {sink(1), source(1, -1)}};
  for (Index n = 1; n <= 8; ++n) EXPECT_EQ(lefschetz_fixed_point_sum(flip, n), 1 + ipow(-1, n));
  EXPECT_THROW(lefschetz_fixed_point_sum(Portfolio{Sphere{2}, {source(1, 2)}}, 1), std::invalid_argument);
  EXPECT_THROW(lefschetz_fixed_point_sum(Portfolio{Disk{}, {sink(1)}}, 0), std::invalid_argument);
}

TEST(LefschetzSum, MatchesOnFamily) {
  std::size_t checked = 0;
  fpi::testing::for_each_family_portfolio([&](const Portfolio& p) {
    if (!check_consistency(p)) return;
    ++checked;
    for (Index n = 1; n <= 12; ++n) {
      const Integer expected = p.on_sphere() ? 1 + ipow(p.degree(), n) : Integer(1);
      ASSERT_EQ(lefschetz_fixed_point_sum(p, n), expected);
    }
  });
  EXPECT_GT(checked, 10u);
}

TEST(Growth, Examples) {
  EXPECT_EQ(growth_lower_bound(2, 10).bound, 1025);
  EXPECT_EQ(growth_lower_bound(0, 7).bound, 1);
  const auto odd = growth_lower_bound(-2, 3);
  EXPECT_EQ(odd.bound, -7);
  EXPECT_TRUE(odd.vacuous);
  EXPECT_EQ(odd.rate_holds, false);
  EXPECT_EQ(growth_lower_bound(-2, 4).rate_holds, true);
  EXPECT_EQ(growth_lower_bound(1, 3).rate_holds, std::nullopt);
  EXPECT_EQ(growth_lower_bound(2, 64).bound, (Integer(1) << 64) + 1);
  EXPECT_THROW(growth_lower_bound(2, 0), std::invalid_argument);
}

}  // namespace
