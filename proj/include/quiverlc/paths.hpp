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

// Oriented and sectional path counts in ZQ. Slices never decrease along
// arrows, so every path from a to b lies in the slab [a.slice, b.slice].

#ifndef QUIVERLC_PATHS_HPP
#define QUIVERLC_PATHS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/quiver.hpp"
#include "quiverlc/structure.hpp"
#include "quiverlc/zq.hpp"

namespace quiverlc {

using BigInt = boost::multiprecision::cpp_int;

struct PathCount {
  enum class Kind { finite, infinite, lower_bound };

  Kind kind = Kind::finite;
  BigInt count = 0;
  std::vector<ZVertex> witness;  // closed cycle on an a-to-b route, for infinite

  static PathCount finite(BigInt n) { return {Kind::finite, std::move(n), {}}; }
  static PathCount infinite(std::vector<ZVertex> cycle) { return {Kind::infinite, 0, std::move(cycle)}; }
  static PathCount lower_bound(BigInt n) { return {Kind::lower_bound, std::move(n), {}}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }

  std::string to_string() const {
    switch (kind) {
      case Kind::finite:
        return count.str();
      case Kind::infinite:
        return "inf";
      case Kind::lower_bound:
        return ">=" + count.str();
    }
    return "?";
  }
};

inline std::string to_string(PathCount::Kind k) {
  switch (k) {
    case PathCount::Kind::finite:
      return "finite";
    case PathCount::Kind::infinite:
      return "infinite";
    case PathCount::Kind::lower_bound:
      return "lower_bound";
  }
  return "?";
}

namespace detail {

/// A slab restricted to vertices lying on some route from a to b.
struct RouteGraph {
  std::vector<ZVertex> nodes;
  std::map<ZVertex, std::size_t> index;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> out;  // (target, multiplicity)
  std::optional<std::size_t> source;
  std::optional<std::size_t> target;
};

inline RouteGraph route_graph(const BasicQuiver<ZVertex>& slab, const ZVertex& a, const ZVertex& b) {
  RouteGraph rg;
  if (!slab.contains(a) || !slab.contains(b)) return rg;

  std::map<ZVertex, bool> forward;
  std::vector<ZVertex> stack{a};
  forward[a] = true;
  while (!stack.empty()) {
    ZVertex v = stack.back();
    stack.pop_back();
    for (const auto& n : slab.out_arrows(v)) {
      if (forward.emplace(n.vertex, true).second) stack.push_back(n.vertex);
    }
  }
  if (!forward.contains(b)) return rg;

  std::map<ZVertex, bool> backward;
  stack = {b};
  backward[b] = true;
  while (!stack.empty()) {
    ZVertex v = stack.back();
    stack.pop_back();
    for (const auto& n : slab.in_arrows(v)) {
      if (forward.contains(n.vertex) && backward.emplace(n.vertex, true).second) stack.push_back(n.vertex);
    }
  }

  for (const auto& [v, _] : backward) {
    rg.index.emplace(v, rg.nodes.size());
    rg.nodes.push_back(v);
  }
  rg.out.resize(rg.nodes.size());
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    for (const auto& n : slab.out_arrows(rg.nodes[i])) {
      if (auto it = rg.index.find(n.vertex); it != rg.index.end()) rg.out[i].push_back({it->second, n.multiplicity});
    }
  }
  rg.source = rg.index.at(a);
  rg.target = rg.index.at(b);
  return rg;
}

inline std::vector<std::vector<std::size_t>> plain_adjacency(const RouteGraph& rg) {
  std::vector<std::vector<std::size_t>> adj(rg.nodes.size());
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    for (auto [j, m] : rg.out[i]) adj[i].push_back(j);
  }
  return adj;
}

inline std::vector<std::size_t> topological_order(const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::size_t> indegree(adj.size(), 0);
  for (const auto& list : adj) {
    for (auto j : list) ++indegree[j];
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t i = adj.size(); i-- > 0;) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto w : adj[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return order;
}

inline PathCount count_in_slab(const BasicQuiver<ZVertex>& slab, const ZVertex& a, const ZVertex& b,
                               bool include_trivial, bool windowed) {
  RouteGraph rg = route_graph(slab, a, b);
  if (!rg.source) return windowed ? PathCount::lower_bound(0) : PathCount::finite(0);
  auto adj = plain_adjacency(rg);
  if (auto cycle = find_cycle_indexed(adj)) {
    std::vector<ZVertex> witness;
    for (auto i : *cycle) witness.push_back(rg.nodes[i]);
    return PathCount::infinite(std::move(witness));
  }
  std::vector<BigInt> ways(rg.nodes.size(), 0);
  ways[*rg.source] = 1;
  for (auto v : topological_order(adj)) {
    if (ways[v] == 0) continue;
    for (auto [w, m] : rg.out[v]) ways[w] += ways[v] * m;
  }
  BigInt total = ways[*rg.target];
  if (a == b && !include_trivial) total -= 1;
  return windowed ? PathCount::lower_bound(std::move(total)) : PathCount::finite(std::move(total));
}

/// Sectional paths: A_i != tau A_{i+2}, i.e. a step from `cur` to `next` is
/// forbidden when next = tau^{-1}(prev). Counted over states (prev, cur).
inline PathCount count_sectional_in_slab(const BasicQuiver<ZVertex>& slab, const ZVertex& a, const ZVertex& b,
                                         bool include_trivial, bool windowed) {
  RouteGraph rg = route_graph(slab, a, b);
  if (!rg.source) return windowed ? PathCount::lower_bound(0) : PathCount::finite(0);

  // State 0 is (none, a); the others are arrows (prev, cur) of the route graph.
  const std::size_t none = rg.nodes.size();
  std::vector<std::pair<std::size_t, std::size_t>> states{{none, *rg.source}};
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> state_index;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> next;
  auto state_of = [&](std::size_t prev, std::size_t cur) {
    auto [it, fresh] = state_index.emplace(std::pair{prev, cur}, states.size());
    if (fresh) states.push_back({prev, cur});
    return it->second;
  };
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto [prev, cur] = states[s];
    std::vector<std::pair<std::size_t, std::uint64_t>> moves;
    for (auto [w, m] : rg.out[cur]) {
      if (prev != none && rg.nodes[w] == translate(rg.nodes[prev], -1)) continue;
      moves.push_back({state_of(cur, w), m});
    }
    next.push_back(std::move(moves));
  }

  // Keep states from which some state ending at b is reachable.
  std::vector<std::vector<std::size_t>> reverse(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (auto [t, m] : next[s]) reverse[t].push_back(s);
  }
  std::vector<bool> useful(states.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s].second == *rg.target) {
      useful[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto p : reverse[s]) {
      if (!useful[p]) {
        useful[p] = true;
        stack.push_back(p);
      }
    }
  }

  std::vector<std::vector<std::size_t>> adj(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (!useful[s]) continue;
    for (auto [t, m] : next[s]) {
      if (useful[t]) adj[s].push_back(t);
    }
  }
  if (auto cycle = find_cycle_indexed(adj)) {
    std::vector<ZVertex> witness;
    for (auto s : *cycle) witness.push_back(rg.nodes[states[s].second]);
    return PathCount::infinite(std::move(witness));
  }

  std::vector<BigInt> ways(states.size(), 0);
  ways[0] = 1;
  BigInt total = 0;
  for (auto s : topological_order(adj)) {
    if (!useful[s] || ways[s] == 0) continue;
    if (states[s].second == *rg.target && (s != 0 || include_trivial)) total += ways[s];
    for (auto [t, m] : next[s]) {
      if (useful[t]) ways[t] += ways[s] * m;
    }
  }
  return windowed ? PathCount::lower_bound(std::move(total)) : PathCount::finite(std::move(total));
}

}  // namespace detail

/// Number of oriented paths from a to b in ZQ, each parallel arrow counted
/// separately. Includes the empty path when a = b unless include_trivial is
/// false. Infinite, with a cycle witness, when a cycle lies on a route.
inline PathCount count_paths_zq(const Quiver& q, const ZVertex& a, const ZVertex& b, bool include_trivial = true) {
  if (!q.contains(a.base)) throw UnknownVertex(a.base.to_string());
  if (!q.contains(b.base)) throw UnknownVertex(b.base.to_string());
  if (b.slice < a.slice) return PathCount::finite(0);
  return detail::count_in_slab(slab(q, Window::slices(a.slice, b.slice)).quiver, a, b, include_trivial, false);
}

inline PathCount count_sectional_paths_zq(const Quiver& q, const ZVertex& a, const ZVertex& b,
                                          bool include_trivial = true) {
  if (!q.contains(a.base)) throw UnknownVertex(a.base.to_string());
  if (!q.contains(b.base)) throw UnknownVertex(b.base.to_string());
  if (b.slice < a.slice) return PathCount::finite(0);
  return detail::count_sectional_in_slab(slab(q, Window::slices(a.slice, b.slice)).quiver, a, b, include_trivial,
                                         false);
}

/// Families: only the paths inside the window's base scope are counted, so
/// the result is a lower bound. A cycle found inside the window is a real one
/// and gives Infinite. Families with a finite domain are counted exactly.
inline PathCount count_paths_zq(const LazyQuiver& q, const ZVertex& a, const ZVertex& b, const Window& w,
                                bool include_trivial = true) {
  if (q.domain().is_finite()) return count_paths_zq(materialize(q), a, b, include_trivial);
  if (!in_scope(q, w, a.base)) throw UnknownVertex(a.base.to_string());
  if (!in_scope(q, w, b.base)) throw UnknownVertex(b.base.to_string());
  if (b.slice < a.slice) return PathCount::finite(0);
  Window scoped{a.slice, b.slice, w.bases};
  return detail::count_in_slab(slab(q, scoped).quiver, a, b, include_trivial, true);
}

inline PathCount count_sectional_paths_zq(const LazyQuiver& q, const ZVertex& a, const ZVertex& b, const Window& w,
                                          bool include_trivial = true) {
  if (q.domain().is_finite()) return count_sectional_paths_zq(materialize(q), a, b, include_trivial);
  if (!in_scope(q, w, a.base)) throw UnknownVertex(a.base.to_string());
  if (!in_scope(q, w, b.base)) throw UnknownVertex(b.base.to_string());
  if (b.slice < a.slice) return PathCount::finite(0);
  Window scoped{a.slice, b.slice, w.bases};
  return detail::count_sectional_in_slab(slab(q, scoped).quiver, a, b, include_trivial, true);
}

/// Paths from x to tau^{-n} x.
inline PathCount count_paths_to_shift(const Quiver& q, const ZVertex& x, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("shift must be nonnegative");
  return count_paths_zq(q, x, translate(x, -n));
}

inline PathCount count_paths_to_shift(const LazyQuiver& q, const ZVertex& x, std::int64_t n, const Window& w) {
  if (n < 0) throw std::invalid_argument("shift must be nonnegative");
  return count_paths_zq(q, x, translate(x, -n), w);
}

/// A path with each step resolved to one of the parallel arrows.
struct ZPath {
  std::vector<ZVertex> vertices;
  std::vector<std::uint64_t> arrows;  // arrows[i] < multiplicity(vertices[i] -> vertices[i+1])

  friend bool operator==(const ZPath&, const ZPath&) = default;
};

struct EnumerateOptions {
  std::size_t limit = 100'000;
  std::size_t max_length = 64;
  bool sectional_only = false;
};

struct PathEnumeration {
  std::vector<ZPath> paths;
  bool truncated = false;  // the limit or the length cap cut the search
};

/// Depth-first enumeration over the slab, in sorted order. Parallel arrows
/// give distinct paths. a = b yields the empty path first.
inline PathEnumeration enumerate_paths_zq(const Quiver& q, const ZVertex& a, const ZVertex& b,
                                          const EnumerateOptions& opts = {}) {
  if (!q.contains(a.base)) throw UnknownVertex(a.base.to_string());
  if (!q.contains(b.base)) throw UnknownVertex(b.base.to_string());
  PathEnumeration result;
  if (b.slice < a.slice) return result;
  auto s = slab(q, Window::slices(a.slice, b.slice));
  detail::RouteGraph rg = detail::route_graph(s.quiver, a, b);
  if (!rg.source) return result;

  ZPath current;
  current.vertices.push_back(a);
  auto visit = [&](auto&& self, std::size_t v) -> void {
    if (result.truncated) return;
    if (v == *rg.target) {
      if (result.paths.size() >= opts.limit) {
        result.truncated = true;
        return;
      }
      result.paths.push_back(current);
    }
    if (rg.out[v].empty()) return;
    if (current.arrows.size() >= opts.max_length) {
      result.truncated = true;
      return;
    }
    for (auto [w, m] : rg.out[v]) {
      if (opts.sectional_only && current.vertices.size() >= 2 &&
          rg.nodes[w] == translate(current.vertices[current.vertices.size() - 2], -1))
        continue;
      for (std::uint64_t k = 0; k < m; ++k) {
        current.vertices.push_back(rg.nodes[w]);
        current.arrows.push_back(k);
        self(self, w);
        current.vertices.pop_back();
        current.arrows.pop_back();
        if (result.truncated) return;
      }
    }
  };
  visit(visit, *rg.source);
  return result;
}

}  // namespace quiverlc

#endif  // QUIVERLC_PATHS_HPP
