// Builds the disk map realizing a certificate and reads its indices back
// off the winding engine.

#include "fpi/finitemaps.hpp"
#include "fpi/planar.hpp"

#include <iomanip>
#include <iostream>

int main() {
  using namespace fpi;
  const std::map<Index, Index> a{{1, 2}, {2, 1}, {3, 1}};
  const auto f = PlanarMap::realization(a);
  const auto numerical = index_sequence_numerical(f, 12, {0.0, 0.0}, default_radius());

  std::map<Index, Integer> certificate(a.begin(), a.end());
  const auto combinatorial = index_sequence_of(realize_from_certificate(certificate), 12);

  std::cout << " n  winding  finite map\n";
  for (Index n = 1; n <= 12; ++n)
    std::cout << std::setw(2) << n << std::setw(9) << numerical[n].str() << std::setw(12) << combinatorial[n].str() << "\n";

  const auto cert = check_admissible(numerical);
  std::cout << "admissible: " << (cert.admissible ? "yes" : "no") << ", multiplicities:";
  for (const auto& [k, m] : cert.multiplicities) std::cout << " " << k << "=" << m;
  std::cout << "\n";
}
