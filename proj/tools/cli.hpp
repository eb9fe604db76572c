#pragma once

// Command-line front end. Every subcommand prints one JSON document.
//
// Exit codes:
//   0  success
//   1  negative verdict of a check (congruence violations, not admissible,
//      inconsistent portfolio, unequal zetas, failed verification) or a
//      sequence that has no integral Dold decomposition
//   2  usage or input parse error
//   3  numerical failure of the winding engine

#include "fpi/finitemaps.hpp"
#include "fpi/json.hpp"
#include "fpi/planar.hpp"
#include "fpi/portfolio.hpp"
#include "fpi/sequences.hpp"
#include "fpi/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fpi::cli {

using Json = nlohmann::json;

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kNumerical = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Json parse_json(const std::string& text, const char* flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string(flag) + ": invalid JSON: " + e.what());
  }
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

inline Index parse_positive(const std::string& text, const char* what) {
  const Integer v = parse_integer(text);
  if (v < 1 || v > Integer(1u << 30)) throw UsageError(std::string(what) + ": expected a positive integer, got '" + text + "'");
  return static_cast<Index>(v);
}

/// "--F 1,2,3 --a 1=2,2=1,3=1" -> {1:2, 2:1, 3:1}.
inline std::map<Index, Index> parse_certificate(const std::string& F, const std::string& a) {
  std::map<Index, Index> out;
  for (const auto& k : split(F, ',')) out[parse_positive(k, "--F")] = 0;
  for (const auto& entry : split(a, ',')) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw UsageError("--a: expected k=a_k entries, got '" + entry + "'");
    const Index k = parse_positive(entry.substr(0, eq), "--a key");
    if (!out.contains(k)) throw UsageError("--a: key " + std::to_string(k) + " is not in --F");
    out[k] = parse_positive(entry.substr(eq + 1), "--a value");
  }
  if (out.empty()) throw UsageError("--F: F must be non-empty");
  for (const auto& [k, count] : out)
    if (count == 0) throw UsageError("--a: missing multiplicity for k = " + std::to_string(k));
  return out;
}

inline Point parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--center: expected x,y");
  try {
    return {std::stod(parts[0]), std::stod(parts[1])};
  } catch (const std::exception&) {
    throw UsageError("--center: expected x,y");
  }
}

/// Flags naming a built-in planar map.
struct MapFlags {
  std::string family;
  std::int64_t d = 2;
  std::string F;
  std::string a;
  std::string params;

  void attach(CLI::App* sub) {
    sub->add_option("--family", family, "sink | source | realization | unbounded");
    sub->add_option("--d", d, "source degree (family source)");
    sub->add_option("--F", F, "periods, comma separated (family realization)");
    sub->add_option("--a", a, "multiplicities k=a_k, comma separated (family realization)");
    sub->add_option("--params", params, "map as JSON, e.g. {\"family\":\"source\",\"d\":3}");
  }

  PlanarMap build() const {
    if (!params.empty()) {
      if (!family.empty()) throw UsageError("give either --params or --family, not both");
      return json::planar_map_from_json(parse_json(params, "--params"));
    }
    if (family == "sink") return PlanarMap::sink();
    if (family == "source") return PlanarMap::source(d);
    if (family == "unbounded") return PlanarMap::unbounded();
    if (family == "realization") return PlanarMap::realization(parse_certificate(F, a));
    throw UsageError("--family: expected sink, source, realization or unbounded");
  }
};

struct WindingFlags {
  double radius = 0.0;
  std::string center = "0,0";
  Index initial_samples = WindingOptions{}.initial_samples;
  Index max_depth = WindingOptions{}.max_depth;
  double epsilon = WindingOptions{}.epsilon;
  Index max_initial_samples = WindingOptions{}.max_initial_samples;
  Index max_samples = WindingOptions{}.max_samples;

  void attach(CLI::App* sub) {
    sub->add_option("--radius", radius, "circle radius (default e^-3)");
    sub->add_option("--center", center, "circle center x,y (default 0,0)");
    sub->add_option("--initial-samples", initial_samples, "initial samples on the circle");
    sub->add_option("--max-depth", max_depth, "maximum bisection depth");
    sub->add_option("--epsilon", epsilon, "fixed point detection threshold");
    sub->add_option("--max-initial-samples", max_initial_samples,
                    "cap for the resolution cross-check (none if <= --initial-samples)");
    sub->add_option("--max-samples", max_samples, "budget of map evaluations per index");
  }

  double effective_radius() const { return radius > 0.0 ? radius : default_radius(); }
  WindingOptions options() const {
    WindingOptions o;
    o.initial_samples = initial_samples;
    o.max_depth = max_depth;
    o.epsilon = epsilon;
    o.max_initial_samples = max_initial_samples;
    o.max_samples = max_samples;
    return o;
  }
};

/// The index sequence each built-in map is known to have.
inline Integer expected_index(const PlanarMap& f, Index n) {
  return std::visit(
      [&](const auto& m) -> Integer {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SinkExample>) {
          return 1;
        } else if constexpr (std::is_same_v<M, SourceExample>) {
          return ipow(Integer(m.degree), n);
        } else if constexpr (std::is_same_v<M, RealizationMap>) {
          return 1 - Integer(m.boundary_fixed_points(n));
        } else {
          return ipow(Integer(2), n) - 1;
        }
      },
      f.family());
}

}  // namespace detail

/// Runs the CLI with the given arguments (argv[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed point index sequences, Lefschetz zeta functions and orbit portfolios"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON result to this file instead of standard output");

  std::string seq_text, coefficients_text, map_text, zeta_text, lhs_text, rhs_text, portfolio_text, F_text, a_text;
  Index horizon = kDefaultHorizon;
  Index single_n = 0;
  std::int64_t degree = 2;

  auto* decompose = app.add_subcommand("decompose", "Dold coefficients a_k of a sequence");
  decompose->add_option("--seq", seq_text, "sequence as JSON array of decimal strings")->required();

  auto* synth = app.add_subcommand("synth", "build a sequence from Dold coefficients, a finite map or a certificate");
  synth->add_option("--coefficients", coefficients_text, "Dold coefficients as JSON object");
  synth->add_option("--map", map_text, "finite map as JSON {\"m\":..,\"targets\":[..]}");
  synth->add_option("--F", F_text, "periods of a certificate, comma separated");
  synth->add_option("--a", a_text, "multiplicities k=a_k, comma separated");
  synth->add_option("--N", horizon, "horizon");

  auto* congruences = app.add_subcommand("congruences", "check Dold's congruences");
  congruences->add_option("--seq", seq_text, "sequence as JSON array")->required();

  auto* admissible = app.add_subcommand("admissible", "test for the shape sigma^1 - sum a_k sigma^k");
  admissible->add_option("--seq", seq_text, "sequence as JSON array")->required();

  auto* zeta_expand = app.add_subcommand("zeta-expand", "power series of a zeta function");
  zeta_expand->add_option("--zeta", zeta_text, "product form as JSON");
  zeta_expand->add_option("--coefficients", coefficients_text, "Dold coefficients as JSON object");
  zeta_expand->add_option("--seq", seq_text, "sequence; expands exp(sum I_n t^n / n)");
  zeta_expand->add_option("--N", horizon, "degree");

  auto* zeta_equal = app.add_subcommand("zeta-equal", "compare two product forms as rational functions");
  zeta_equal->add_option("--lhs", lhs_text, "product form as JSON")->required();
  zeta_equal->add_option("--rhs", rhs_text, "product form as JSON")->required();

  auto* classify = app.add_subcommand("classify", "consistency and structural checks of an orbit portfolio");
  classify->add_option("--portfolio", portfolio_text, "portfolio as JSON")->required();

  detail::MapFlags index_map, verify_map;
  detail::WindingFlags index_winding, verify_winding;
  auto* index = app.add_subcommand("index", "numerical fixed point indices of a built-in planar map");
  index_map.attach(index);
  index_winding.attach(index);
  index->add_option("--n", single_n, "single iterate n (otherwise the sequence n = 1..N)");
  index->add_option("--N", horizon, "horizon");

  auto* verify = app.add_subcommand("verify", "compare numerical indices with the known closed form");
  verify_map.attach(verify);
  verify_winding.attach(verify);
  verify->add_option("--N", horizon, "horizon");

  auto* growth = app.add_subcommand("growth", "lower bound 1 + d^n on the number of fixed points of f^n");
  growth->add_option("--d", degree, "degree of the sphere map")->required();
  growth->add_option("--n", single_n, "iterate")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();

  Json result;
  int code = kOk;
  try {
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    if (horizon == 0) throw UsageError("--N must be positive");

    if (decompose->parsed()) {
      const auto seq = json::sequence_from_json(detail::parse_json(seq_text, "--seq"));
      try {
        result = Json{{"coefficients", json::to_json(dold_coefficients(seq))}};
      } catch (const NonIntegralCoefficient& e) {
        result = Json{{"error", "NonIntegralCoefficient"}, {"k", e.k()}, {"value", fpi::to_string(e.value())}};
        err << e.what() << "\n";
        code = kNegative;
      }
    } else if (synth->parsed()) {
      const int sources = !coefficients_text.empty() + !map_text.empty() + !F_text.empty();
      if (sources != 1) throw UsageError("synth: give exactly one of --coefficients, --map, --F/--a");
      if (!coefficients_text.empty()) {
        const auto coefficients = json::coefficients_from_json(detail::parse_json(coefficients_text, "--coefficients"));
        result = Json{{"sequence", json::to_json(from_dold(coefficients, horizon))}};
      } else {
        std::optional<FiniteMap> phi;
        if (!map_text.empty()) {
          phi = json::finite_map_from_json(detail::parse_json(map_text, "--map"));
        } else {
          std::map<Index, Integer> multiplicities;
          for (const auto& [k, a] : detail::parse_certificate(F_text, a_text)) multiplicities[k] = a;
          phi = realize_from_certificate(multiplicities);
        }
        result = Json{{"map", json::to_json(*phi)},
                      {"census", json::to_json(orbit_census(*phi))},
                      {"sequence", json::to_json(index_sequence_of(*phi, horizon))}};
      }
    } else if (congruences->parsed()) {
      const auto report = check_dold_congruences(json::sequence_from_json(detail::parse_json(seq_text, "--seq")));
      result = json::to_json(report);
      if (!report.passed()) code = kNegative;
    } else if (admissible->parsed()) {
      const auto cert = check_admissible(json::sequence_from_json(detail::parse_json(seq_text, "--seq")));
      result = json::to_json(cert);
      if (!cert.admissible) code = kNegative;
    } else if (zeta_expand->parsed()) {
      const int sources = !zeta_text.empty() + !coefficients_text.empty() + !seq_text.empty();
      if (sources != 1) throw UsageError("zeta-expand: give exactly one of --zeta, --coefficients, --seq");
      if (!seq_text.empty()) {
        const auto seq = json::sequence_from_json(detail::parse_json(seq_text, "--seq"));
        result = Json{{"series", json::to_json(exp_series(seq))}};
      } else {
        ZetaProductForm z;
        if (!zeta_text.empty()) {
          z = json::zeta_from_json(detail::parse_json(zeta_text, "--zeta"));
        } else {
          const auto coefficients = json::coefficients_from_json(detail::parse_json(coefficients_text, "--coefficients"));
          Index top = horizon;
          for (const auto& [k, a] : coefficients) top = std::max(top, k);
          z = zeta_from_dold(DoldDecomposition(top, coefficients));
        }
        result = Json{{"zeta", json::to_json(z)}, {"series", json::to_json(expand(z, horizon))}};
      }
    } else if (zeta_equal->parsed()) {
      const bool same = equals(json::zeta_from_json(detail::parse_json(lhs_text, "--lhs")),
                               json::zeta_from_json(detail::parse_json(rhs_text, "--rhs")));
      result = Json{{"equal", same}};
      if (!same) code = kNegative;
    } else if (classify->parsed()) {
      const auto p = json::portfolio_from_json(detail::parse_json(portfolio_text, "--portfolio"));
      const bool consistent = check_consistency(p);
      result = Json{{"consistent", consistent},
                    {"zeta", json::to_json(portfolio_zeta(p))},
                    {"global_zeta", json::to_json(global_zeta(p.ambient))},
                    {"structural", json::to_json(structural_checks(p))},
                    {"infinitude_triggers", json::to_json(infinitude_triggers(p))}};
      if (!consistent) code = kNegative;
    } else if (index->parsed()) {
      const auto f = index_map.build();
      const Point center = detail::parse_point(index_winding.center);
      const double radius = index_winding.effective_radius();
      const auto opts = index_winding.options();
      result = Json{{"map", json::to_json(f)}, {"radius", radius}, {"center", {center.x, center.y}}};
      if (single_n > 0) {
        result["n"] = single_n;
        result["winding"] = json::to_json(winding_index(f, single_n, center, radius, opts));
      } else {
        result["sequence"] = json::to_json(index_sequence_numerical(f, horizon, center, radius, opts));
      }
    } else if (verify->parsed()) {
      const auto f = verify_map.build();
      const Point center = detail::parse_point(verify_winding.center);
      const double radius = verify_winding.effective_radius();
      const auto numerical = index_sequence_numerical(f, horizon, center, radius, verify_winding.options());
      auto expected = IndexSequence::zeros(horizon);
      std::vector<Index> mismatches;
      for (Index n = 1; n <= horizon; ++n) {
        expected[n] = detail::expected_index(f, n);
        if (expected[n] != numerical[n]) mismatches.push_back(n);
      }
      result = Json{{"map", json::to_json(f)},
                    {"N", horizon},
                    {"numerical", json::to_json(numerical)},
                    {"expected", json::to_json(expected)},
                    {"match", mismatches.empty()},
                    {"mismatches", mismatches},
                    {"congruences", json::to_json(check_dold_congruences(numerical))},
                    {"admissible", json::to_json(check_admissible(numerical))}};
      if (!mismatches.empty()) code = kNegative;
    } else if (growth->parsed()) {
      result = json::to_json(growth_lower_bound(degree, single_n));
    }
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    file << result.dump() << "\n";
  } else {
    out << result.dump() << "\n";
  }
  return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace fpi::cli
