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

#ifndef QUIVERLC_DOT_HPP
#define QUIVERLC_DOT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quiverlc/distances.hpp"
#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/quiver.hpp"
#include "quiverlc/sections.hpp"
#include "quiverlc/window_graph.hpp"
#include "quiverlc/zq.hpp"

namespace quiverlc {

enum class Annotation { plain, lightcones, roundtrip, section };

struct RenderSpec {
  Window window;
  Annotation mode = Annotation::plain;
  std::optional<ZVertex> center;   // lightcones, roundtrip
  std::optional<Section> section;  // section
};

struct RenderNode {
  std::string id;
  std::string label;
  std::map<std::string, std::string> attributes;
};

struct RenderEdge {
  std::string from;
  std::string to;
  std::uint64_t multiplicity = 1;
};

/// Nodes and edges in output order, before serialization.
struct Rendering {
  std::string name;
  std::vector<RenderNode> nodes;
  std::vector<RenderEdge> edges;
};

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class G>
Rendering render_slab(const G& q, const RenderSpec& spec) {
  if (spec.window.empty()) throw std::invalid_argument("render window is empty");
  Slab s = slab(q, spec.window);
  Rendering r;
  r.name = "ZQ";

  std::optional<WindowGraph> g;
  std::optional<ConeProfile> right;
  std::optional<ConeProfile> left;
  std::map<ZVertex, std::string> cone_mark;
  if (spec.mode == Annotation::lightcones || spec.mode == Annotation::roundtrip) {
    if (!spec.center) throw std::invalid_argument("annotation needs a center");
    if (!spec.window.contains_slice(spec.center->slice) || !in_scope(q, spec.window, spec.center->base))
      throw std::invalid_argument("center " + spec.center->to_string() + " lies outside the window");
    if constexpr (std::same_as<G, Quiver>) {
      g = WindowGraph::of(q);
    } else {
      g = WindowGraph::of(q, spec.window);
    }
    right = cone_profile(*g, spec.center->base, ConeSide::right);
    left = cone_profile(*g, spec.center->base, ConeSide::left);
  }
  if (spec.mode == Annotation::lightcones) {
    for (const auto& v : detail::lightcone_from_graph(*g, *spec.center, ConeSide::right, spec.window).members)
      cone_mark[v] = "right";
    for (const auto& v : detail::lightcone_from_graph(*g, *spec.center, ConeSide::left, spec.window).members)
      cone_mark[v] = cone_mark.contains(v) ? "both" : "left";
  }
  if (spec.mode == Annotation::section && !spec.section) throw std::invalid_argument("annotation needs a section");

  for (const auto& v : s.quiver.vertices()) {
    RenderNode node{v.to_string(), v.to_string(), {}};
    switch (spec.mode) {
      case Annotation::plain:
        break;
      case Annotation::lightcones:
        if (auto it = cone_mark.find(v); it != cone_mark.end()) {
          node.attributes["lightcone"] = it->second;
          node.attributes["style"] = "filled";
          node.attributes["fillcolor"] =
              it->second == "right" ? "lightcoral" : it->second == "left" ? "lightblue" : "gold";
        }
        break;
      case Annotation::roundtrip: {
        std::size_t i = g->node(v.base);
        ExtDistance d = right->distance(i) + left->distance(i);
        node.attributes["distance"] = d.to_string();
        node.label += "\\nd=" + d.to_string();
        break;
      }
      case Annotation::section:
        if (spec.section->contains(v)) {
          node.attributes["section"] = "true";
          node.attributes["style"] = "filled";
          node.attributes["fillcolor"] = "palegreen";
        }
        break;
    }
    r.nodes.push_back(std::move(node));
  }
  for (const auto& [key, mult] : s.quiver.arrows()) r.edges.push_back({key.first.to_string(), key.second.to_string(), mult});
  return r;
}

}  // namespace detail

inline Rendering render(const Quiver& q, const RenderSpec& spec) { return detail::render_slab(q, spec); }
inline Rendering render(const LazyQuiver& q, const RenderSpec& spec) { return detail::render_slab(q, spec); }

/// The base quiver itself, with no ZQ structure.
inline Rendering render_quiver(const Quiver& q) {
  Rendering r;
  r.name = "Q";
  for (const auto& v : q.vertices()) r.nodes.push_back({v.to_string(), v.to_string(), {}});
  for (const auto& [key, mult] : q.arrows()) r.edges.push_back({key.first.to_string(), key.second.to_string(), mult});
  return r;
}

/// Deterministic DOT text. Parallel arrows become one edge carrying a
/// multiplicity attribute.
inline std::string emit_dot(const Rendering& r) {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(r.name) << " {\n";
  os << "  node [shape=box];\n";
  for (const auto& n : r.nodes) {
    os << "  " << detail::dot_quote(n.id) << " [label=" << detail::dot_quote(n.label);
    for (const auto& [k, v] : n.attributes) os << ", " << k << "=" << detail::dot_quote(v);
    os << "];\n";
  }
  for (const auto& e : r.edges) {
    os << "  " << detail::dot_quote(e.from) << " -> " << detail::dot_quote(e.to);
    if (e.multiplicity > 1) {
      os << " [label=" << detail::dot_quote(std::to_string(e.multiplicity))
         << ", multiplicity=" << detail::dot_quote(std::to_string(e.multiplicity)) << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string emit_dot(const Quiver& q, const RenderSpec& spec) { return emit_dot(render(q, spec)); }
inline std::string emit_dot(const LazyQuiver& q, const RenderSpec& spec) { return emit_dot(render(q, spec)); }
inline std::string emit_dot(const Quiver& q) { return emit_dot(render_quiver(q)); }

}  // namespace quiverlc

#endif  // QUIVERLC_DOT_HPP
