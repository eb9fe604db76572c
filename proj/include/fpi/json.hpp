#pragma once

// JSON encodings of the library types.
//
//   IndexSequence        ["1","1","-2"]              (decimal strings)
//   DoldDecomposition    {"1":"1","3":"-1"}
//   FiniteMap            {"m":3,"targets":[1,2,0]}
//   ZetaProductForm      [{"r":1,"k":3,"e":-1}]
//   PowerSeries          ["1","3/2","0"]
//   Portfolio            {"ambient":{"sphere":2} | "disk",
//                         "orbits":[{"m":1,"kind":"sink"},
//                                   {"m":1,"kind":{"source":2}},
//                                   {"m":2,"kind":{"other":[[3,1]]}}]}
//   PlanarMap            {"family":"realization","F":[1,2,3],"a":{"1":2,"2":1,"3":1}}
//
// Decoders throw std::invalid_argument on malformed input.

#include "fpi/finitemaps.hpp"
#include "fpi/planar.hpp"
#include "fpi/portfolio.hpp"
#include "fpi/sequences.hpp"
#include "fpi/zeta.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpi::json {

using Json = nlohmann::json;

namespace detail {

inline Integer integer_from(const Json& j, const char* what) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw std::invalid_argument(std::string(what) + ": expected a decimal integer string");
}

inline Index positive_index_from_string(const std::string& key, const char* what) {
  const Integer k = parse_integer(key);
  if (k < 1 || k > Integer(std::numeric_limits<std::uint32_t>::max()))
    throw std::invalid_argument(std::string(what) + ": key '" + key + "' is not a positive integer");
  return static_cast<Index>(k);
}

inline Index positive_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1)
    throw std::invalid_argument(std::string(what) + ": expected a positive integer");
  return j.get<Index>();
}

inline std::int64_t int64(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected an integer");
  return j.get<std::int64_t>();
}

inline const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

}  // namespace detail

// Sequences ---------------------------------------------------------------

inline Json to_json(const IndexSequence& seq) {
  Json out = Json::array();
  for (const auto& t : seq.terms()) out.push_back(t.str());
  return out;
}

inline IndexSequence sequence_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("sequence: expected a non-empty array");
  std::vector<Integer> terms;
  for (const auto& e : j) terms.push_back(detail::integer_from(e, "sequence"));
  return IndexSequence(std::move(terms));
}

inline Json to_json(const DoldDecomposition::Map& coefficients) {
  Json out = Json::object();
  for (const auto& [k, a] : coefficients) out[std::to_string(k)] = a.str();
  return out;
}

inline Json to_json(const DoldDecomposition& d) { return to_json(d.coefficients()); }

inline DoldDecomposition::Map coefficients_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("decomposition: expected an object");
  DoldDecomposition::Map out;
  for (const auto& [key, value] : j.items()) {
    Integer a = detail::integer_from(value, "decomposition");
    if (a != 0) out[detail::positive_index_from_string(key, "decomposition")] = std::move(a);
  }
  return out;
}

inline Json to_json(const CongruenceReport& r) {
  return Json{{"horizon", r.horizon}, {"pass", r.passed()}, {"violations", r.violations}};
}

inline Json to_json(const AdmissibilityCertificate& c) {
  Json multiplicities = Json::object();
  for (const auto& [k, a] : c.multiplicities) multiplicities[std::to_string(k)] = a.str();
  Json out{{"admissible", c.admissible},
           {"F", std::vector<Index>(c.F.begin(), c.F.end())},
           {"multiplicities", multiplicities},
           {"horizon", c.horizon}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

// Finite maps -------------------------------------------------------------

inline Json to_json(const FiniteMap& phi) { return Json{{"m", phi.size()}, {"targets", phi.targets()}}; }

inline FiniteMap finite_map_from_json(const Json& j) {
  const Index m = detail::positive_index(detail::field(j, "m", "finite map"), "finite map m");
  const Json& targets = detail::field(j, "targets", "finite map");
  if (!targets.is_array() || targets.size() != m)
    throw std::invalid_argument("finite map: targets must be an array of length m");
  std::vector<Index> t;
  for (const auto& e : targets) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
      throw std::invalid_argument("finite map: targets must be non-negative integers");
    t.push_back(e.get<Index>());
  }
  return FiniteMap(std::move(t));
}

inline Json to_json(const OrbitCensus& census) {
  Json out = Json::object();
  for (const auto& [k, count] : census) out[std::to_string(k)] = count;
  return out;
}

// Zeta --------------------------------------------------------------------

inline Json to_json(const ZetaProductForm& z) {
  Json out = Json::array();
  for (const auto& [key, e] : z.factors()) out.push_back(Json{{"r", key.r}, {"k", key.k}, {"e", e}});
  return out;
}

inline ZetaProductForm zeta_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("zeta: expected an array of factors");
  ZetaProductForm z;
  for (const auto& f : j) {
    z.add(detail::int64(detail::field(f, "r", "zeta factor"), "zeta factor r"),
          detail::positive_index(detail::field(f, "k", "zeta factor"), "zeta factor k"),
          detail::int64(detail::field(f, "e", "zeta factor"), "zeta factor e"));
  }
  return z;
}

inline Json to_json(const PowerSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(fpi::to_string(c));
  return out;
}

inline PowerSeries series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("series: expected a non-empty array");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("series: coefficients must be \"p/q\" strings");
    c.push_back(parse_rational(e.get<std::string>()));
  }
  return PowerSeries(std::move(c));
}

// Portfolios --------------------------------------------------------------

inline Json to_json(const OrbitSpec& o) {
  Json kind;
  if (o.is_sink()) {
    kind = "sink";
  } else if (auto r = o.source_degree()) {
    kind = Json{{"source", *r}};
  } else {
    Json shape = Json::array();
    for (const auto& [k, b] : std::get<OtherOrbit>(o.kind).shape) shape.push_back(Json::array({k, b}));
    kind = Json{{"other", shape}};
  }
  return Json{{"m", o.period}, {"kind", kind}};
}

inline OrbitSpec orbit_from_json(const Json& j) {
  const Index m = detail::positive_index(detail::field(j, "m", "orbit"), "orbit m");
  const Json& kind = detail::field(j, "kind", "orbit");
  if (kind.is_string() && kind.get<std::string>() == "sink") return OrbitSpec(m, Sink{});
  if (kind.is_object() && kind.size() == 1) {
    if (kind.contains("source")) return OrbitSpec(m, Source{detail::int64(kind.at("source"), "source degree")});
    if (kind.contains("other")) {
      const Json& shape = kind.at("other");
      if (!shape.is_array()) throw std::invalid_argument("orbit: 'other' must be a list of [k, b] pairs");
      OtherOrbit other;
      for (const auto& pair : shape) {
        if (!pair.is_array() || pair.size() != 2)
          throw std::invalid_argument("orbit: 'other' entries must be [k, b] pairs");
        other.shape.emplace_back(detail::positive_index(pair[0], "orbit k"), detail::positive_index(pair[1], "orbit b"));
      }
      return OrbitSpec(m, std::move(other));
    }
  }
  throw std::invalid_argument("orbit: kind must be \"sink\", {\"source\": r} or {\"other\": [[k, b], ...]}");
}

inline Json to_json(const Portfolio& p) {
  Json ambient = p.on_sphere() ? Json{{"sphere", p.degree()}} : Json("disk");
  Json orbits = Json::array();
  for (const auto& o : p.orbits) orbits.push_back(to_json(o));
  return Json{{"ambient", ambient}, {"orbits", orbits}};
}

inline Portfolio portfolio_from_json(const Json& j) {
  const Json& ambient = detail::field(j, "ambient", "portfolio");
  Portfolio p{Disk{}, {}};
  if (ambient.is_string() && ambient.get<std::string>() == "disk") {
    p.ambient = Disk{};
  } else if (ambient.is_object() && ambient.size() == 1 && ambient.contains("sphere")) {
    p.ambient = Sphere{detail::int64(ambient.at("sphere"), "sphere degree")};
  } else {
    throw std::invalid_argument("portfolio: ambient must be {\"sphere\": d} or \"disk\"");
  }
  const Json& orbits = detail::field(j, "orbits", "portfolio");
  if (!orbits.is_array()) throw std::invalid_argument("portfolio: orbits must be an array");
  for (const auto& o : orbits) p.orbits.push_back(orbit_from_json(o));
  return p;
}

inline Json to_json(const StructuralReport& r) {
  return Json{{"assumption", StructuralReport::kAssumption}, {"violated", r.violated}, {"details", r.details}};
}

inline Json to_json(const std::vector<InfinitudeTrigger>& triggers) {
  Json out = Json::array();
  for (auto t : triggers) out.push_back(describe(t));
  return out;
}

inline Json to_json(const GrowthBound& g) {
  Json out{{"d", g.degree}, {"n", g.n}, {"bound", g.bound.str()}, {"vacuous", g.vacuous}};
  out["rate_holds"] = g.rate_holds ? Json(*g.rate_holds) : Json(nullptr);
  return out;
}

// Planar maps -------------------------------------------------------------

inline std::map<Index, Index> multiplicities_from_json(const Json& F, const Json& a) {
  if (!F.is_array() || F.empty()) throw std::invalid_argument("realization: F must be a non-empty array");
  if (!a.is_object()) throw std::invalid_argument("realization: a must be an object");
  std::map<Index, Index> out;
  for (const auto& k : F) out[detail::positive_index(k, "realization F")] = 0;
  for (const auto& [key, value] : a.items()) {
    const Index k = detail::positive_index_from_string(key, "realization a");
    if (!out.contains(k)) throw std::invalid_argument("realization: a has key " + key + " not in F");
    out[k] = detail::positive_index(value, "realization a_k");
  }
  for (const auto& [k, count] : out)
    if (count == 0) throw std::invalid_argument("realization: missing multiplicity for k = " + std::to_string(k));
  return out;
}

inline PlanarMap planar_map_from_json(const Json& j) {
  const Json& family = detail::field(j, "family", "planar map");
  if (!family.is_string()) throw std::invalid_argument("planar map: family must be a string");
  const auto name = family.get<std::string>();
  if (name == "sink") return PlanarMap::sink();
  if (name == "source") return PlanarMap::source(detail::int64(detail::field(j, "d", "source"), "source d"));
  if (name == "unbounded") return PlanarMap::unbounded();
  if (name == "realization")
    return PlanarMap::realization(
        multiplicities_from_json(detail::field(j, "F", "realization"), detail::field(j, "a", "realization")));
  throw std::invalid_argument("planar map: unknown family '" + name + "'");
}

inline Json to_json(const PlanarMap& f) {
  Json out{{"family", f.name()}};
  if (const auto* s = std::get_if<SourceExample>(&f.family())) out["d"] = s->degree;
  if (const auto* r = std::get_if<RealizationMap>(&f.family())) {
    Json F = Json::array();
    Json a = Json::object();
    for (const auto& [k, count] : r->multiplicities()) {
      F.push_back(k);
      a[std::to_string(k)] = count;
    }
    out["F"] = F;
    out["a"] = a;
  }
  return out;
}

inline Json to_json(const WindingResult& w) {
  return Json{{"index", w.index}, {"samples_used", w.samples_used}, {"max_arc_step", w.max_arc_step}};
}

}  // namespace fpi::json
