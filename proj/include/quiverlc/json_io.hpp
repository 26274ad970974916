// Copyright 2026 The quiverlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON shapes of the result types (nlohmann::json, keys sorted).

#ifndef QUIVERLC_JSON_IO_HPP
#define QUIVERLC_JSON_IO_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverlc/distances.hpp"
#include "quiverlc/dot.hpp"
#include "quiverlc/ext_distance.hpp"
#include "quiverlc/paths.hpp"
#include "quiverlc/sections.hpp"
#include "quiverlc/zq.hpp"

namespace quiverlc {

using Json = nlohmann::json;

inline std::string grade_name(VerdictGrade g) { return g == VerdictGrade::exact ? "exact" : "within_probe"; }

inline std::string side_name(ConeSide s) { return s == ConeSide::right ? "right" : "left"; }

inline Json vertex_json(const VertexId& v) { return v.to_string(); }

inline Json vertices_json(const std::vector<VertexId>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vertex_json(v));
  return a;
}

/// {"slice": n, "base": "x"}
inline Json to_json(const ZVertex& v) { return {{"slice", v.slice}, {"base", v.base.to_string()}}; }

inline ZVertex zvertex_from_json(const Json& j) {
  const Json& base = j.at("base");
  VertexId b = base.is_number_integer() ? VertexId(base.get<std::int64_t>()) : VertexId::parse(base.get<std::string>());
  return {j.at("slice").get<std::int64_t>(), b};
}

inline Json zvertices_json(const std::vector<ZVertex>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

/// {"status": "finite"|"infinite"|"at_least", "value": n?, "bound": b?, "expansions": k}
inline Json to_json(const ExtDistance& d) {
  Json j{{"expansions", d.expansions()}};
  switch (d.kind()) {
    case ExtDistance::Kind::finite:
      j["status"] = "finite";
      j["value"] = d.value();
      break;
    case ExtDistance::Kind::infinite:
      j["status"] = "infinite";
      break;
    case ExtDistance::Kind::at_least:
      j["status"] = "at_least";
      j["bound"] = d.bound();
      break;
  }
  return j;
}

inline ExtDistance ext_distance_from_json(const Json& j) {
  auto status = j.at("status").get<std::string>();
  auto exp = j.value("expansions", std::uint64_t{0});
  if (status == "finite") return ExtDistance::finite(j.at("value").get<std::int64_t>(), exp);
  if (status == "infinite") return ExtDistance::infinite(exp);
  if (status == "at_least") return ExtDistance::at_least(j.at("bound").get<std::int64_t>(), exp);
  throw std::invalid_argument("unknown distance status: " + status);
}

/// {"status": "finite"|"infinite"|"lower_bound", "count": "digits", "witness_cycle": [...]?}
inline Json to_json(const PathCount& c) {
  Json j{{"status", to_string(c.kind)}};
  if (c.is_infinite()) {
    j["witness_cycle"] = zvertices_json(c.witness);
  } else {
    j["count"] = c.count.str();
  }
  return j;
}

inline PathCount path_count_from_json(const Json& j) {
  auto status = j.at("status").get<std::string>();
  if (status == "infinite") {
    std::vector<ZVertex> cycle;
    for (const auto& v : j.at("witness_cycle")) cycle.push_back(zvertex_from_json(v));
    return PathCount::infinite(std::move(cycle));
  }
  BigInt n(j.at("count").get<std::string>());
  if (status == "finite") return PathCount::finite(std::move(n));
  if (status == "lower_bound") return PathCount::lower_bound(std::move(n));
  throw std::invalid_argument("unknown count status: " + status);
}

/// {"center": ZVertex|null, "selection": [{"base": x, "slice": j}, ...]}
inline Json to_json(const Section& s) {
  Json sel = Json::array();
  for (const auto& [base, slice] : s.selection) sel.push_back({{"base", base.to_string()}, {"slice", slice}});
  return {{"center", s.center ? to_json(*s.center) : Json(nullptr)}, {"selection", sel}};
}

inline Section section_from_json(const Json& j) {
  Section s;
  if (j.contains("center") && !j.at("center").is_null()) s.center = zvertex_from_json(j.at("center"));
  for (const auto& e : j.at("selection")) {
    ZVertex v = zvertex_from_json(e);
    if (!s.selection.emplace(v.base, v.slice).second)
      throw std::invalid_argument("orbit " + v.base.to_string() + " selected twice");
  }
  return s;
}

inline Json to_json(const SlfReport& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    probes.push_back({{"radius", p.radius},
                      {"right_size", p.right_size},
                      {"right_complete", p.right_complete},
                      {"left_size", p.left_size},
                      {"left_complete", p.left_complete}});
  }
  return {{"holds", r.holds},
          {"grade", grade_name(r.grade)},
          {"connected", r.connected},
          {"acyclic", r.acyclic},
          {"cycle", vertices_json(r.cycle)},
          {"base", r.base ? vertex_json(*r.base) : Json(nullptr)},
          {"probes", probes},
          {"reason", r.reason}};
}

inline Json to_json(const SectionReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.negative_pairs)
    pairs.push_back({{"from", to_json(p.from)}, {"to", to_json(p.to)}, {"distance", p.distance}});
  Json arrows = Json::array();
  for (const auto& a : r.arrow_failures)
    arrows.push_back({{"selected", to_json(a.selected)}, {"neighbor", to_json(a.neighbor)}, {"outgoing", a.outgoing}});
  return {{"valid", r.valid},
          {"grade", grade_name(r.grade)},
          {"coverage_ok", r.coverage_ok},
          {"distance_criterion_ok", r.distance_criterion_ok},
          {"arrow_criterion_ok", r.arrow_criterion_ok},
          {"missing_orbits", vertices_json(r.missing_orbits)},
          {"extra_orbits", vertices_json(r.extra_orbits)},
          {"negative_pairs", pairs},
          {"arrow_failures", arrows},
          {"pairs_checked", r.pairs_checked},
          {"pairs_unresolved", r.pairs_unresolved},
          {"strong_local_finiteness",
           r.strong_local_finiteness ? to_json(*r.strong_local_finiteness) : Json(nullptr)}};
}

inline Json to_json(const SphereReport& s) {
  return {{"center", vertex_json(s.center)},
          {"radius", s.radius},
          {"kind", to_string(s.kind)},
          {"members", vertices_json(s.members)},
          {"complete", s.complete}};
}

inline Json to_json(const LightCone& c) {
  return {{"center", to_json(c.center)},
          {"side", side_name(c.side)},
          {"members", zvertices_json(c.members)},
          {"unresolved", vertices_json(c.unresolved)}};
}

inline Json to_json(const ClassificationReport& r) {
  Json spheres = Json::array();
  for (const auto& s : r.spheres) spheres.push_back({{"radius", s.radius}, {"size", s.size}, {"complete", s.complete}});
  return {{"verdict", to_string(r.verdict)},
          {"grade", grade_name(r.grade)},
          {"base", vertex_json(r.base)},
          {"acyclic", r.acyclic},
          {"cycle", vertices_json(r.cycle)},
          {"connected", r.connected},
          {"spheres", spheres}};
}

inline Json to_json(const Rendering& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) nodes.push_back({{"id", n.id}, {"label", n.label}, {"attributes", n.attributes}});
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity}});
  return {{"name", r.name}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace quiverlc

#endif  // QUIVERLC_JSON_IO_HPP
