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

// Windowed light cone searches with certified answers.
//
// A WindowGraph holds the vertices of a finite region ("inner" nodes) plus a
// few "exterior" nodes, each standing for a whole part of the quiver outside
// the region. Every arrow between the region and the outside is kept, with its
// outer end replaced by the exterior node. Moving within an exterior node is
// free. Two searches are run from a source:
//
//   upper: walks that stay inside the region. These are real walks, so their
//          costs bound the true distance from above.
//   lower: walks that may pass through exterior nodes. Every real walk maps to
//          one of these with no larger cost, so these bound from below.
//
// Where the two agree the in-window answer is the true one. For a finite
// quiver there are no exterior nodes and every answer is exact.

#ifndef QUIVERLC_WINDOW_GRAPH_HPP
#define QUIVERLC_WINDOW_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "quiverlc/ext_distance.hpp"
#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/quiver.hpp"
#include "quiverlc/structure.hpp"
#include "quiverlc/zq.hpp"

namespace quiverlc {

/// A finite materialization of part of a larger quiver. Boundary vertices
/// may have arrows that the materialization does not show.
struct WindowedQuiver {
  Quiver quiver;
  std::vector<VertexId> boundary;  // sorted
};

/// right: d(source, y) for all y. left: d(y, source) for all y.
enum class ConeSide { right, left };

class WindowGraph {
 public:
  /// Every vertex of a finite quiver; no exterior.
  static WindowGraph of(const Quiver& q) {
    WindowGraph g;
    g.set_inner(q.vertices());
    for (const auto& [key, mult] : q.arrows()) g.add_edge(g.index_.at(key.first), g.index_.at(key.second));
    g.finish();
    return g;
  }

  /// The window's base scope of a family. Infinite domains get one exterior
  /// node per unbounded side.
  static WindowGraph of(const LazyQuiver& q, const Window& w) {
    WindowGraph g;
    g.set_inner(scope_vertices(q, w));
    const auto& dom = q.domain();
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
    if (!dom.is_finite()) {
      const auto [lo, hi] = *w.bases;
      if (dom.kind == DomainKind::integers || lo > 0) left = g.add_exterior();
      right = g.add_exterior();
      (void)hi;
      const auto links = q.exterior_links();
      if (left && links.left_to_right) g.pending_.push_back({*left, *right});
      if (left && links.right_to_left) g.pending_.push_back({*right, *left});
    }
    auto node_of = [&](const VertexId& v) -> std::size_t {
      if (auto it = g.index_.find(v); it != g.index_.end()) return it->second;
      if (v.as_integer() < w.bases->first) return *left;
      return *right;
    };
    for (const auto& v : g.inner_) {
      std::size_t i = g.index_.at(v);
      for (const auto& n : q.out_arrows(v)) g.add_edge(i, node_of(n.vertex));
      for (const auto& n : q.in_arrows(v)) {
        std::size_t j = node_of(n.vertex);
        if (g.is_exterior(j)) g.add_edge(j, i);
      }
    }
    g.finish();
    return g;
  }

  /// A materialized window; its boundary vertices connect freely (both ways)
  /// to a single exterior node.
  static WindowGraph of(const WindowedQuiver& wq) {
    WindowGraph g;
    g.set_inner(wq.quiver.vertices());
    for (const auto& [key, mult] : wq.quiver.arrows()) g.add_edge(g.index_.at(key.first), g.index_.at(key.second));
    if (!wq.boundary.empty()) {
      std::size_t e = g.add_exterior();
      for (const auto& b : wq.boundary) {
        g.add_edge(g.index_.at(b), e);
        g.add_edge(e, g.index_.at(b));
      }
    }
    g.finish();
    return g;
  }

  const std::vector<VertexId>& inner() const { return inner_; }
  std::size_t inner_count() const { return inner_.size(); }
  std::size_t node_count() const { return out_.size(); }
  std::size_t exterior_count() const { return out_.size() - inner_.size(); }
  bool is_exterior(std::size_t node) const { return node >= inner_.size(); }
  bool contains(const VertexId& v) const { return index_.contains(v); }

  std::size_t node(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw UnknownVertex(v.to_string() + " (outside window)");
    return it->second;
  }

  const std::vector<std::size_t>& out(std::size_t node) const { return out_[node]; }
  const std::vector<std::size_t>& in(std::size_t node) const { return in_[node]; }

  /// Oriented cycle among inner nodes only; such a cycle is a real cycle.
  std::optional<std::vector<VertexId>> inner_cycle() const {
    std::vector<std::vector<std::size_t>> adj(inner_.size());
    for (std::size_t i = 0; i < inner_.size(); ++i) {
      for (auto j : out_[i]) {
        if (!is_exterior(j)) adj[i].push_back(j);
      }
    }
    auto cycle = detail::find_cycle_indexed(adj);
    if (!cycle) return std::nullopt;
    std::vector<VertexId> result;
    for (auto i : *cycle) result.push_back(inner_[i]);
    return result;
  }

  /// Unoriented connectivity of the inner nodes, ignoring the exterior.
  bool inner_connected() const {
    if (inner_.empty()) return true;
    std::vector<bool> seen(inner_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto* adj : {&out_[v], &in_[v]}) {
        for (auto w : *adj) {
          if (!is_exterior(w) && !seen[w]) {
            seen[w] = true;
            ++count;
            stack.push_back(w);
          }
        }
      }
    }
    return count == inner_.size();
  }

 private:
  void set_inner(std::vector<VertexId> vertices) {
    inner_ = std::move(vertices);
    for (std::size_t i = 0; i < inner_.size(); ++i) index_.emplace(inner_[i], i);
    out_.assign(inner_.size(), {});
    in_.assign(inner_.size(), {});
  }
  std::size_t add_exterior() {
    out_.emplace_back();
    in_.emplace_back();
    return out_.size() - 1;
  }
  void add_edge(std::size_t from, std::size_t to) {
    out_[from].push_back(to);
    in_[to].push_back(from);
  }
  void finish() {
    for (auto [a, b] : pending_) add_edge(a, b);
    pending_.clear();
    for (auto* adj : {&out_, &in_}) {
      for (auto& list : *adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
      }
    }
  }

  std::vector<VertexId> inner_;
  std::map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
};

namespace detail {

/// 0-1 search over a WindowGraph. For ConeSide::right an arrow is free
/// forwards and costs 1 backwards; ConeSide::left swaps the two.
inline std::vector<std::optional<std::int64_t>> zero_one_search(const WindowGraph& g, std::size_t source,
                                                                ConeSide side, bool through_exterior) {
  std::vector<std::optional<std::int64_t>> dist(g.node_count());
  std::vector<bool> settled(g.node_count(), false);
  std::deque<std::pair<std::size_t, std::int64_t>> queue;
  dist[source] = 0;
  queue.push_back({source, 0});
  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    if (settled[v]) continue;
    settled[v] = true;
    auto relax = [&](std::size_t w, std::int64_t cost) {
      if (!through_exterior && g.is_exterior(w)) return;
      if (dist[w] && *dist[w] <= d + cost) return;
      dist[w] = d + cost;
      if (cost == 0) {
        queue.push_front({w, d});
      } else {
        queue.push_back({w, d + 1});
      }
    };
    const auto& free = side == ConeSide::right ? g.out(v) : g.in(v);
    const auto& paid = side == ConeSide::right ? g.in(v) : g.out(v);
    for (auto w : free) relax(w, 0);
    for (auto w : paid) relax(w, 1);
  }
  return dist;
}

}  // namespace detail

/// Upper and lower bounds on one-sided light cone distances from a source.
struct ConeProfile {
  ConeSide side = ConeSide::right;
  std::vector<std::optional<std::int64_t>> upper;
  std::vector<std::optional<std::int64_t>> lower;
  std::size_t inner_count = 0;

  /// Cheapest way to reach anything outside the window; nullopt if the
  /// outside is unreachable (or there is none).
  std::optional<std::int64_t> exterior_bound() const {
    std::optional<std::int64_t> best;
    for (std::size_t i = inner_count; i < lower.size(); ++i) {
      if (lower[i] && (!best || *lower[i] < *best)) best = lower[i];
    }
    return best;
  }

  bool certified(std::size_t node) const { return upper[node] == lower[node]; }

  /// Exact when certified, otherwise the lower bound.
  ExtDistance distance(std::size_t node) const {
    if (certified(node)) return upper[node] ? ExtDistance::finite(*upper[node]) : ExtDistance::infinite();
    return ExtDistance::at_least(lower[node].value_or(0));
  }
};

inline ConeProfile cone_profile(const WindowGraph& g, std::size_t source, ConeSide side) {
  ConeProfile p;
  p.side = side;
  p.inner_count = g.inner_count();
  p.upper = detail::zero_one_search(g, source, side, false);
  p.lower = detail::zero_one_search(g, source, side, true);
  return p;
}

inline ConeProfile cone_profile(const WindowGraph& g, const VertexId& source, ConeSide side) {
  return cone_profile(g, g.node(source), side);
}

/// Lower bound on the round trip distance from the source to anything
/// outside the window.
inline std::optional<std::int64_t> roundtrip_exterior_bound(const ConeProfile& right, const ConeProfile& left) {
  std::optional<std::int64_t> best;
  for (std::size_t i = right.inner_count; i < right.lower.size(); ++i) {
    if (right.lower[i] && left.lower[i]) {
      std::int64_t d = *right.lower[i] + *left.lower[i];
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

}  // namespace quiverlc

#endif  // QUIVERLC_WINDOW_GRAPH_HPP
