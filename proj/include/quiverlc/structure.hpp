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

#ifndef QUIVERLC_STRUCTURE_HPP
#define QUIVERLC_STRUCTURE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/quiver.hpp"

namespace quiverlc {

namespace detail {

/// Any oriented cycle of an index digraph, as a closed sequence
/// (first == last), or nullopt. Iterative three-colour DFS.
inline std::optional<std::vector<std::size_t>> find_cycle_indexed(const std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = out.size();
  enum : std::uint8_t { white, grey, black };
  std::vector<std::uint8_t> colour(n, white);
  std::vector<std::size_t> parent(n, n);

  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != white) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        std::size_t w = out[v][next++];
        if (colour[w] == grey) {
          std::vector<std::size_t> cycle{w};
          std::vector<std::size_t> back;
          for (std::size_t u = v; u != w; u = parent[u]) back.push_back(u);
          cycle.insert(cycle.end(), back.rbegin(), back.rend());
          cycle.push_back(w);
          return cycle;
        }
        if (colour[w] == white) {
          colour[w] = grey;
          parent[w] = v;
          stack.push_back({w, 0});
        }
      } else {
        colour[v] = black;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

template <FiniteQuiverLike G>
struct IndexedQuiver {
  std::vector<typename G::vertex_type> vertices;
  std::map<typename G::vertex_type, std::size_t> index;
  std::vector<std::vector<std::size_t>> out;

  explicit IndexedQuiver(const G& q) {
    for (const auto& v : q.vertices()) {
      index.emplace(v, vertices.size());
      vertices.push_back(v);
    }
    out.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (const auto& n : q.out_arrows(vertices[i])) out[i].push_back(index.at(n.vertex));
    }
  }
};

}  // namespace detail

template <class V>
struct AcyclicityReport {
  bool acyclic = true;
  std::vector<V> cycle;  // closed witness, first == last; empty when acyclic

  explicit operator bool() const { return acyclic; }
};

template <FiniteQuiverLike G>
AcyclicityReport<typename G::vertex_type> is_acyclic(const G& q) {
  detail::IndexedQuiver<G> iq(q);
  AcyclicityReport<typename G::vertex_type> report;
  if (auto cycle = detail::find_cycle_indexed(iq.out)) {
    report.acyclic = false;
    for (auto i : *cycle) report.cycle.push_back(iq.vertices[i]);
  }
  return report;
}

/// Maximal unoriented-connected vertex sets, each sorted, ordered by their
/// smallest vertex.
template <FiniteQuiverLike G>
std::vector<std::vector<typename G::vertex_type>> connected_components(const G& q) {
  using V = typename G::vertex_type;
  std::vector<std::vector<V>> components;
  std::set<V> seen;
  for (const auto& root : q.vertices()) {
    if (seen.contains(root)) continue;
    std::vector<V> component;
    std::vector<V> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      V v = stack.back();
      stack.pop_back();
      component.push_back(v);
      auto visit = [&](const V& w) {
        if (seen.insert(w).second) stack.push_back(w);
      };
      for (const auto& n : q.out_arrows(v)) visit(n.vertex);
      for (const auto& n : q.in_arrows(v)) visit(n.vertex);
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

template <FiniteQuiverLike G>
bool is_connected(const G& q) {
  return connected_components(q).size() <= 1;
}

enum class VerdictGrade {
  exact,        // holds (or fails) for the whole quiver
  within_probe  // only the probed vertices were inspected
};

struct LocalFinitenessVerdict {
  bool holds = true;
  VerdictGrade grade = VerdictGrade::exact;
  std::size_t max_neighbors = 0;
  std::map<VertexId, std::size_t> neighbor_counts;  // probed vertices only
};

namespace detail {
template <QuiverLike G>
std::size_t distinct_neighbors(const G& q, const typename G::vertex_type& v) {
  std::set<typename G::vertex_type> seen;
  for (const auto& n : q.out_arrows(v)) seen.insert(n.vertex);
  for (const auto& n : q.in_arrows(v)) seen.insert(n.vertex);
  return seen.size();
}
}  // namespace detail

/// Finite quivers are locally finite; the neighbour counts are reported anyway.
inline LocalFinitenessVerdict is_locally_finite(const Quiver& q) {
  LocalFinitenessVerdict verdict;
  for (const auto& v : q.vertices()) {
    auto n = detail::distinct_neighbors(q, v);
    verdict.neighbor_counts[v] = n;
    verdict.max_neighbors = std::max(verdict.max_neighbors, n);
  }
  return verdict;
}

/// Probe verdict: every probed vertex's enumerations terminated with a finite
/// neighbour count. Never a claim about unprobed vertices.
inline LocalFinitenessVerdict is_locally_finite(const LazyQuiver& q, const std::vector<VertexId>& probe) {
  if (probe.empty()) throw std::invalid_argument("local finiteness probe needs at least one vertex");
  LocalFinitenessVerdict verdict;
  verdict.grade = VerdictGrade::within_probe;
  for (const auto& v : probe) {
    if (!q.contains(v)) throw UnknownVertex(v.to_string());
    auto n = detail::distinct_neighbors(q, v);
    verdict.neighbor_counts[v] = n;
    verdict.max_neighbors = std::max(verdict.max_neighbors, n);
  }
  return verdict;
}

/// No rays and no corays. For a finite quiver this is exactly acyclicity.
inline bool is_path_finite(const Quiver& q) { return is_acyclic(q).acyclic; }

// Undecidable from finite inspection; use the windowed probes in sections.hpp.
bool is_path_finite(const LazyQuiver&) = delete;

}  // namespace quiverlc

#endif  // QUIVERLC_STRUCTURE_HPP
