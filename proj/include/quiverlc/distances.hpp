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

// Light cone and round trip distances.
//
// The right light cone of a vertex a of ZQ consists of the vertices c with a
// path a -> c but none a -> tau(c). The right light cone distance d(a, b) is
// the n for which tau^{-n}(b) lies on that cone. On Q itself, d_Q(x, y) is
// d((0,x), (0,y)), which is also the least number of arrows walked backwards
// on an unoriented walk from x to y. The round trip distance is
// d(x, y) + d(y, x).

#ifndef QUIVERLC_DISTANCES_HPP
#define QUIVERLC_DISTANCES_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "quiverlc/ext_distance.hpp"
#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/quiver.hpp"
#include "quiverlc/window_graph.hpp"
#include "quiverlc/zq.hpp"

namespace quiverlc {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Raised by the slab oracle when its window cannot certify an answer.
class WindowTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class G>
concept BaseQuiver = QuiverLike<G> && std::same_as<typename G::vertex_type, VertexId>;

/// Right light cone distance on Q: deque-based 0-1 search where arrows are
/// free forwards and cost 1 backwards. The budget caps vertex expansions; on
/// a cap hit the answer is a lower bound. Multiplicities are ignored.
template <BaseQuiver G>
ExtDistance lightcone_distance_q(const G& q, const VertexId& x, const VertexId& y,
                                 std::uint64_t budget = kDefaultBudget) {
  if (!q.contains(x)) throw UnknownVertex(x.to_string());
  if (!q.contains(y)) throw UnknownVertex(y.to_string());

  std::unordered_map<VertexId, std::int64_t> dist;
  std::unordered_set<VertexId> settled;
  std::deque<std::pair<VertexId, std::int64_t>> queue;
  std::uint64_t expansions = 0;
  dist[x] = 0;
  queue.push_back({x, 0});

  while (!queue.empty()) {
    auto [v, d] = queue.front();
    queue.pop_front();
    if (!settled.insert(v).second) continue;
    if (v == y) return ExtDistance::finite(d, expansions);
    // The deque front carries the least tentative distance, so everything
    // still unsettled, the target included, is at least d away.
    if (expansions >= budget) return ExtDistance::at_least(d, expansions);
    ++expansions;

    auto relax = [&](const VertexId& w, std::int64_t cost) {
      auto it = dist.find(w);
      if (it != dist.end() && it->second <= d + cost) return;
      dist[w] = d + cost;
      if (cost == 0) {
        queue.push_front({w, d});
      } else {
        queue.push_back({w, d + cost});
      }
    };
    for (const auto& n : q.out_arrows(v)) relax(n.vertex, 0);
    for (const auto& n : q.in_arrows(v)) relax(n.vertex, 1);
  }
  return ExtDistance::infinite(expansions);
}

/// d((i,x), (j,y)) = d_Q(x, y) + i - j, by translation invariance of ZQ and
/// the shift law d(a, tau^n b) = d(a, b) + n. May be negative.
template <BaseQuiver G>
ExtDistance lightcone_distance_zq(const G& q, const ZVertex& a, const ZVertex& b,
                                  std::uint64_t budget = kDefaultBudget) {
  return lightcone_distance_q(q, a.base, b.base, budget).shifted(a.slice - b.slice);
}

template <BaseQuiver G>
ExtDistance left_lightcone_distance(const G& q, const VertexId& x, const VertexId& y,
                                    std::uint64_t budget = kDefaultBudget) {
  return lightcone_distance_q(q, y, x, budget);
}

template <BaseQuiver G>
ExtDistance left_lightcone_distance(const G& q, const ZVertex& a, const ZVertex& b,
                                    std::uint64_t budget = kDefaultBudget) {
  return lightcone_distance_zq(q, b, a, budget);
}

template <BaseQuiver G>
ExtDistance roundtrip_distance(const G& q, const VertexId& x, const VertexId& y,
                               std::uint64_t budget = kDefaultBudget) {
  return lightcone_distance_q(q, x, y, budget) + lightcone_distance_q(q, y, x, budget);
}

template <BaseQuiver G>
ExtDistance roundtrip_distance(const G& q, const ZVertex& a, const ZVertex& b,
                               std::uint64_t budget = kDefaultBudget) {
  return lightcone_distance_zq(q, a, b, budget) + lightcone_distance_zq(q, b, a, budget);
}

// Windowed variants for families. An unbounded search from a vertex with an
// infinite free ray in front of it (every vertex of the linear family) never
// settles anything at distance 1; these answer from the window bounds
// instead, exactly where upper and lower bound meet and as a lower bound
// elsewhere.

inline ExtDistance lightcone_distance_q(const LazyQuiver& q, const VertexId& x, const VertexId& y, const Window& w) {
  if (!in_scope(q, w, x)) throw UnknownVertex(x.to_string());
  if (!in_scope(q, w, y)) throw UnknownVertex(y.to_string());
  WindowGraph g = WindowGraph::of(q, w);
  return cone_profile(g, x, ConeSide::right).distance(g.node(y));
}

inline ExtDistance lightcone_distance_zq(const LazyQuiver& q, const ZVertex& a, const ZVertex& b, const Window& w) {
  return lightcone_distance_q(q, a.base, b.base, w).shifted(a.slice - b.slice);
}

inline ExtDistance roundtrip_distance(const LazyQuiver& q, const VertexId& x, const VertexId& y, const Window& w) {
  return lightcone_distance_q(q, x, y, w) + lightcone_distance_q(q, y, x, w);
}

inline ExtDistance roundtrip_distance(const LazyQuiver& q, const ZVertex& a, const ZVertex& b, const Window& w) {
  return lightcone_distance_zq(q, a, b, w) + lightcone_distance_zq(q, b, a, w);
}

/// Two answers for the same quantity: an exact one wins, otherwise the
/// larger lower bound.
inline ExtDistance tighter(const ExtDistance& a, const ExtDistance& b) {
  if (a.is_exact()) return a;
  if (b.is_exact()) return b;
  return a.bound() >= b.bound() ? a : b;
}

namespace detail {

/// Side of the window an out-of-scope base vertex lies on (0 left, 1 right).
inline int exterior_side(const LazyQuiver&, const Window& w, const VertexId& v) {
  return v.as_integer() < w.bases->first ? 0 : 1;
}
inline int exterior_side(const Quiver&, const Window&, const VertexId&) { return 1; }

/// Least slice increase for a walk from one exterior side of the slab to the
/// other. A base arrow x -> y gives (i,x) -> (i,y) and (i,y) -> (i+1,x), so a
/// link in the reverse direction still connects the sides one slice up.
inline std::optional<std::int64_t> exterior_offset(const LazyQuiver& q, int from, int to) {
  const auto& links = q.exterior_links();
  const bool forward = from == 0 ? links.left_to_right : links.right_to_left;
  const bool backward = from == 0 ? links.right_to_left : links.left_to_right;
  if (from == to || forward) return 0;
  if (backward) return 1;
  return std::nullopt;
}
inline std::optional<std::int64_t> exterior_offset(const Quiver&, int from, int to) {
  if (from == to) return 0;
  return std::nullopt;
}

}  // namespace detail

/// The light cone distance straight from its definition: reachability from
/// a inside the slab of w, reading off the lowest slice of b's orbit that a
/// reaches. The search is repeated with every out-of-window region collapsed
/// to a node that may re-enter the window at any slice not below its entry
/// slice; if that over-approximation changes the answer, or if the answer
/// may lie above the window, WindowTooSmall is thrown.
template <class G>
  requires std::same_as<G, Quiver> || std::same_as<G, LazyQuiver>
ExtDistance lightcone_distance_zq_oracle(const G& q, const ZVertex& a, const ZVertex& b, const Window& w) {
  if (!in_scope(q, w, a.base)) throw UnknownVertex(a.base.to_string());
  if (!in_scope(q, w, b.base)) throw UnknownVertex(b.base.to_string());
  if (!w.contains_slice(a.slice)) throw std::invalid_argument("oracle source " + a.to_string() + " outside window");

  auto inside = [&](const ZVertex& v) { return w.contains_slice(v.slice) && in_scope(q, w, v.base); };

  // Entries into the window from outside, per side: (window vertex, slice of
  // its outside predecessor).
  std::vector<std::pair<ZVertex, std::int64_t>> entries[2];
  for (const auto& x : scope_vertices(q, w)) {
    for (std::int64_t n = a.slice; n <= w.hi; ++n) {
      for (const auto& nb : in_neighbors(q, ZVertex{n, x})) {
        if (!in_scope(q, w, nb.vertex.base))
          entries[detail::exterior_side(q, w, nb.vertex.base)].push_back({{n, x}, nb.vertex.slice});
      }
    }
  }

  struct Pass {
    std::set<ZVertex> reached;
    std::optional<std::int64_t> target_slice;
    std::optional<std::int64_t> exterior[2];
    bool top_exit = false;
  };

  auto run = [&](bool through_exterior) {
    Pass pass;
    std::vector<ZVertex> stack;
    auto visit = [&](const ZVertex& v) {
      if (!pass.reached.insert(v).second) return;
      stack.push_back(v);
      if (v.base == b.base && (!pass.target_slice || v.slice < *pass.target_slice)) pass.target_slice = v.slice;
    };
    auto lower_exterior = [&](int side, std::int64_t slice) {
      bool changed = false;
      for (int s : {0, 1}) {
        auto offset = detail::exterior_offset(q, side, s);
        if (!offset) continue;
        if (!pass.exterior[s] || slice + *offset < *pass.exterior[s]) {
          pass.exterior[s] = slice + *offset;
          changed = true;
        }
      }
      if (!changed || !through_exterior) return;
      for (int s : {0, 1}) {
        if (!pass.exterior[s]) continue;
        for (const auto& [entry, from_slice] : entries[s]) {
          if (from_slice >= *pass.exterior[s]) visit(entry);
        }
      }
    };

    visit(a);
    while (!stack.empty()) {
      ZVertex u = stack.back();
      stack.pop_back();
      for (const auto& nb : out_neighbors(q, u)) {
        if (inside(nb.vertex)) {
          visit(nb.vertex);
        } else if (nb.vertex.slice > w.hi) {
          pass.top_exit = true;
        } else {
          lower_exterior(detail::exterior_side(q, w, nb.vertex.base), nb.vertex.slice);
        }
      }
    }
    return pass;
  };

  Pass exact = run(false);
  Pass over = run(true);

  if (exact.target_slice != over.target_slice)
    throw WindowTooSmall("window cannot certify d(" + a.to_string() + ", " + b.to_string() + ")");
  if (exact.target_slice) return ExtDistance::finite(*exact.target_slice - b.slice);

  bool touched_exterior = over.exterior[0] || over.exterior[1];
  if (!touched_exterior && !over.top_exit) return ExtDistance::infinite();
  if (!touched_exterior && w.hi - 1 >= a.slice) {
    // Bases reached at slice s+1 are a fixed function of those reached at s
    // (s >= a.slice), so two equal consecutive layers repeat forever.
    std::set<VertexId> top;
    std::set<VertexId> below;
    for (const auto& v : over.reached) {
      if (v.slice == w.hi) top.insert(v.base);
      if (v.slice == w.hi - 1) below.insert(v.base);
    }
    if (top == below) return ExtDistance::infinite();
  }
  throw WindowTooSmall("window cannot certify d(" + a.to_string() + ", " + b.to_string() + ")");
}

enum class SphereKind { roundtrip, right, left };

inline std::string to_string(SphereKind k) {
  switch (k) {
    case SphereKind::roundtrip:
      return "roundtrip";
    case SphereKind::right:
      return "right";
    case SphereKind::left:
      return "left";
  }
  return "?";
}

struct SphereReport {
  VertexId center;
  std::int64_t radius = 0;
  SphereKind kind = SphereKind::roundtrip;
  std::vector<VertexId> members;  // sorted
  bool complete = true;           // false: more members may lie outside the window
};

/// Sphere around `center` of the given kind. Complete iff no walk through the
/// exterior can reach the radius, in which case the member set is exact.
inline SphereReport sphere(const WindowGraph& g, const VertexId& center, std::int64_t radius, SphereKind kind) {
  SphereReport report{center, radius, kind, {}, true};
  std::size_t c = g.node(center);
  if (radius < 0) return report;

  std::optional<ConeProfile> right;
  std::optional<ConeProfile> left;
  if (kind != SphereKind::left) right = cone_profile(g, c, ConeSide::right);
  if (kind != SphereKind::right) left = cone_profile(g, c, ConeSide::left);

  std::optional<std::int64_t> outside;
  if (kind == SphereKind::right) outside = right->exterior_bound();
  if (kind == SphereKind::left) outside = left->exterior_bound();
  if (kind == SphereKind::roundtrip) outside = roundtrip_exterior_bound(*right, *left);
  report.complete = !outside || *outside > radius;

  for (std::size_t i = 0; i < g.inner_count(); ++i) {
    std::optional<std::int64_t> d;
    if (kind == SphereKind::right) d = right->upper[i];
    if (kind == SphereKind::left) d = left->upper[i];
    if (kind == SphereKind::roundtrip && right->upper[i] && left->upper[i]) d = *right->upper[i] + *left->upper[i];
    if (d && *d == radius) report.members.push_back(g.inner()[i]);
  }
  return report;
}

inline SphereReport sphere(const Quiver& q, const VertexId& center, std::int64_t radius, SphereKind kind) {
  if (!q.contains(center)) throw UnknownVertex(center.to_string());
  return sphere(WindowGraph::of(q), center, radius, kind);
}

inline SphereReport sphere(const LazyQuiver& q, const VertexId& center, std::int64_t radius, SphereKind kind,
                           const Window& w) {
  if (!in_scope(q, w, center)) throw UnknownVertex(center.to_string());
  return sphere(WindowGraph::of(q, w), center, radius, kind);
}

inline SphereReport roundtrip_sphere(const Quiver& q, const VertexId& x, std::int64_t n) {
  return sphere(q, x, n, SphereKind::roundtrip);
}
inline SphereReport right_sphere(const Quiver& q, const VertexId& x, std::int64_t n) {
  return sphere(q, x, n, SphereKind::right);
}
inline SphereReport left_sphere(const Quiver& q, const VertexId& x, std::int64_t n) {
  return sphere(q, x, n, SphereKind::left);
}
inline SphereReport roundtrip_sphere(const LazyQuiver& q, const VertexId& x, std::int64_t n, const Window& w) {
  return sphere(q, x, n, SphereKind::roundtrip, w);
}
inline SphereReport right_sphere(const LazyQuiver& q, const VertexId& x, std::int64_t n, const Window& w) {
  return sphere(q, x, n, SphereKind::right, w);
}
inline SphereReport left_sphere(const LazyQuiver& q, const VertexId& x, std::int64_t n, const Window& w) {
  return sphere(q, x, n, SphereKind::left, w);
}

/// A light cone of ZQ cut to a window. Orbits whose representative the
/// window cannot certify are listed as unresolved.
struct LightCone {
  ZVertex center;
  ConeSide side = ConeSide::right;
  std::vector<ZVertex> members;  // sorted
  std::vector<VertexId> unresolved;
};

namespace detail {

inline LightCone lightcone_from_graph(const WindowGraph& g, const ZVertex& center, ConeSide side, const Window& w) {
  LightCone cone{center, side, {}, {}};
  ConeProfile p = cone_profile(g, center.base, side);
  for (std::size_t i = 0; i < g.inner_count(); ++i) {
    if (!p.certified(i)) {
      cone.unresolved.push_back(g.inner()[i]);
      continue;
    }
    if (!p.upper[i]) continue;
    // right: d(c, (j,x)) = d_Q(c.base, x) + c.slice - j = 0
    // left:  d((j,x), c) = d_Q(x, c.base) + j - c.slice = 0
    std::int64_t j = side == ConeSide::right ? center.slice + *p.upper[i] : center.slice - *p.upper[i];
    if (w.contains_slice(j)) cone.members.push_back({j, g.inner()[i]});
  }
  std::sort(cone.members.begin(), cone.members.end());
  return cone;
}

}  // namespace detail

inline LightCone right_lightcone_zq(const Quiver& q, const ZVertex& center, const Window& w) {
  if (!q.contains(center.base)) throw UnknownVertex(center.base.to_string());
  return detail::lightcone_from_graph(WindowGraph::of(q), center, ConeSide::right, w);
}
inline LightCone left_lightcone_zq(const Quiver& q, const ZVertex& center, const Window& w) {
  if (!q.contains(center.base)) throw UnknownVertex(center.base.to_string());
  return detail::lightcone_from_graph(WindowGraph::of(q), center, ConeSide::left, w);
}
inline LightCone right_lightcone_zq(const LazyQuiver& q, const ZVertex& center, const Window& w) {
  if (!in_scope(q, w, center.base)) throw UnknownVertex(center.base.to_string());
  return detail::lightcone_from_graph(WindowGraph::of(q, w), center, ConeSide::right, w);
}
inline LightCone left_lightcone_zq(const LazyQuiver& q, const ZVertex& center, const Window& w) {
  if (!in_scope(q, w, center.base)) throw UnknownVertex(center.base.to_string());
  return detail::lightcone_from_graph(WindowGraph::of(q, w), center, ConeSide::left, w);
}

}  // namespace quiverlc

#endif  // QUIVERLC_DISTANCES_HPP
