// Classifies a few orbit portfolios of sphere and disk maps.

#include "fpi/json.hpp"
#include "fpi/portfolio.hpp"

#include <iostream>

int main() {
  using namespace fpi;
  const std::vector<std::pair<const char*, Portfolio>> cases{
      {"north-south map of degree 2", {Sphere{2}, {OrbitSpec(1, Sink{}), OrbitSpec(1, Source{2})}}},
      {"source without a sink", {Sphere{2}, {OrbitSpec(1, Source{2})}}},
      {"degree-1 map with one sink", {Sphere{1}, {OrbitSpec(1, Sink{})}}},
      {"disk map with a sink", {Disk{}, {OrbitSpec(1, Sink{})}}},
      {"flip with a reversing source", {Sphere{-1}, {OrbitSpec(1, Sink{}), OrbitSpec(1, Source{-1})}}},
  };
  for (const auto& [name, p] : cases) {
    std::cout << name << "\n"
              << "  portfolio zeta: " << to_string(portfolio_zeta(p)) << "\n"
              << "  global zeta:    " << to_string(global_zeta(p.ambient)) << "\n"
              << "  consistent:     " << (check_consistency(p) ? "yes" : "no") << "\n"
              << "  structural:     " << json::to_json(structural_checks(p))["violated"].dump() << "\n"
              << "  triggers:       " << json::to_json(infinitude_triggers(p)).dump() << "\n";
  }
}
