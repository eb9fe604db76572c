// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "fpi/finitemaps.hpp"
#include "fpi/planar.hpp"
#include "fpi/portfolio.hpp"
#include "fpi/zeta.hpp"
#include "support/families.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace fpi;

struct Verdict {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

constexpr Point kOrigin{0.0, 0.0};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    std::ostringstream why;
    why << "runtime " << seconds << " s exceeds " << limit_seconds << " s";
    v.fail(why.str());
  }
  std::printf("%s %2d  %-44s %8.3f s%s%s\n", v.ok ? "PASS" : "FAIL", number, title, seconds,
              v.note.empty() ? "" : "  ", v.note.c_str());
  std::fflush(stdout);
  if (!v.ok) ++failures;
}

std::string str(const Integer& v) { return v.str(); }

}  // namespace

int main() {
  criterion(1, "sink index is 1", 1.0, [](Verdict& v) {
    const auto f = PlanarMap::sink();
    for (Index n = 1; n <= 6; ++n) {
      const auto r = winding_index(f, n, kOrigin, 0.3);
      if (r.index != 1) v.fail("n=" + std::to_string(n) + " gave " + std::to_string(r.index));
    }
  });

  criterion(2, "source index is d^n", 5.0, [](Verdict& v) {
    for (std::int64_t d : {-2, 2, 3}) {
      const auto f = PlanarMap::source(d);
      for (Index n = 1; n <= 5; ++n) {
        const auto r = winding_index(f, n, kOrigin, 0.1);
        if (r.index != ipow(d, n))
          v.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + " gave " + std::to_string(r.index));
      }
    }
  });

  criterion(3, "unbounded example gives 2^n - 1", 10.0, [](Verdict& v) {
    const auto I = index_sequence_numerical(PlanarMap::unbounded(), 5, kOrigin, default_radius());
    const IndexSequence expected(std::vector<Integer>{1, 3, 7, 15, 31});
    if (I != expected) v.fail("sequence mismatch");
  });

  criterion(4, "realization gives 1 - sum k a_k", 20.0, [](Verdict& v) {
    const std::vector<std::map<Index, Index>> cases{{{3, 1}}, {{1, 2}, {2, 1}, {3, 1}}};
    for (const auto& a : cases) {
      const auto I = index_sequence_numerical(PlanarMap::realization(a), 6, kOrigin, default_radius());
      for (Index n = 1; n <= 6; ++n) {
        Integer expected = 1;
        for (const auto& [k, count] : a)
          if (n % k == 0) expected -= Integer(k * count);
        if (I[n] != expected) v.fail("n=" + std::to_string(n) + " gave " + str(I[n]) + ", want " + str(expected));
      }
    }
  });

  criterion(5, "exhaustive finite maps on 5 and 6 points", 10.0, [](Verdict& v) {
    std::uint64_t visited = 0;
    for (Index m : {5, 6}) {
      for_each_map(m, [&](const FiniteMap& phi) {
        ++visited;
        const auto I = index_sequence_of(phi, kDefaultHorizon);
        if (!check_dold_congruences(I).passed()) return v.fail("congruence failure");
        const auto cert = check_admissible(I);
        if (!cert.admissible) return v.fail("not admissible");
        std::map<Index, Integer> census;
        for (const auto& [k, c] : orbit_census(phi)) census[k] = c;
        if (cert.multiplicities != census) v.fail("certificate differs from census");
      });
    }
    if (visited != 3125 + 46656) v.fail("visited " + std::to_string(visited) + " maps");
  });

  criterion(6, "zeta expansion equals exp series", 5.0, [](Verdict& v) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 500; ++trial) {
      const auto d = testing::random_decomposition(rng, kDefaultHorizon, 4, 3);
      if (expand(zeta_from_dold(d), kDefaultHorizon) != exp_series(from_dold(d, kDefaultHorizon)))
        v.fail("trial " + std::to_string(trial));
    }
  });

  criterion(7, "portfolio consistency examples", 0.0, [](Verdict& v) {
    const Portfolio full{Sphere{2}, {OrbitSpec(1, Sink{}), OrbitSpec(1, Source{2})}};
    if (!check_consistency(full)) v.fail("sink + source(2) inconsistent");
    if (!structural_checks(full).ok()) v.fail("sink + source(2) has structural violations");
    const Portfolio missing{Sphere{2}, {OrbitSpec(1, Source{2})}};
    if (check_consistency(missing)) v.fail("source(2) alone passes consistency");
    if (structural_checks(missing).ok()) v.fail("source(2) alone passes structural checks");
    if (!check_consistency(Portfolio{Disk{}, {OrbitSpec(1, Sink{})}})) v.fail("disk with a sink inconsistent");
  });

  criterion(8, "structural items (1),(2) imply inconsistency", 0.0, [](Verdict& v) {
    std::size_t counterexamples = 0, violating = 0;
    testing::for_each_family_portfolio([&](const Portfolio& p) {
      const auto report = structural_checks(p);
      const bool item12 = std::any_of(report.violated.begin(), report.violated.end(), [](int i) { return i <= 2; });
      if (!item12) return;
      ++violating;
      if (check_consistency(p)) ++counterexamples;
    });
    if (counterexamples != 0) v.fail(std::to_string(counterexamples) + " counterexamples");
    if (violating == 0) v.fail("family has no violating portfolio");
  });

  criterion(9, "Lefschetz sum is 1 + d^n", 0.0, [](Verdict& v) {
    std::size_t consistent = 0;
    testing::for_each_family_portfolio([&](const Portfolio& p) {
      if (!p.on_sphere() || !check_consistency(p)) return;
      ++consistent;
      for (Index n = 1; n <= 12; ++n)
        if (lefschetz_fixed_point_sum(p, n) != 1 + ipow(p.degree(), n)) v.fail("mismatch");
    });
    if (consistent == 0) v.fail("no consistent sphere portfolio in family");
  });

  criterion(10, "growth bound 1 + 2^n and rate", 0.0, [](Verdict& v) {
    for (Index n = 1; n <= 64; ++n) {
      const auto g = growth_lower_bound(2, n);
      if (g.bound != 1 + (Integer(1) << n)) v.fail("bound at n=" + std::to_string(n));
      if (g.rate_holds != true) v.fail("rate at n=" + std::to_string(n));
      const double rate = std::log1p(std::ldexp(1.0, static_cast<int>(n))) / static_cast<double>(n);
      if (!(rate >= std::log(2.0))) v.fail("double rate at n=" + std::to_string(n));
    }
  });

  return failures == 0 ? 0 : 1;
}
