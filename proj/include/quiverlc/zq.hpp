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

// The stable translation quiver ZQ of a quiver Q. Vertices are pairs (n, x)
// with n an integer slice and x a vertex of Q. There are as many arrows
// (i,x) -> (i,y) as arrows x -> y in Q, as many (i,x) -> (i+1,y) as arrows
// y -> x in Q, and no others. The translation is tau(n, x) = (n - 1, x).

#ifndef QUIVERLC_ZQ_HPP
#define QUIVERLC_ZQ_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/quiver.hpp"

namespace quiverlc {

struct ZVertex {
  std::int64_t slice = 0;
  VertexId base;

  friend bool operator==(const ZVertex&, const ZVertex&) = default;
  friend std::strong_ordering operator<=>(const ZVertex& a, const ZVertex& b) {
    if (auto c = a.slice <=> b.slice; c != 0) return c;
    return a.base <=> b.base;
  }

  /// "n:base", e.g. "0:x" or "-1:2".
  std::string to_string() const { return std::to_string(slice) + ":" + base.to_string(); }

  /// Parses "n:base"; the slice is everything before the first ':'.
  static ZVertex parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size())
      throw std::invalid_argument("expected 'slice:base', got '" + std::string(text) + "'");
    std::int64_t slice = 0;
    auto head = text.substr(0, colon);
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), slice);
    if (ec != std::errc() || ptr != head.data() + head.size())
      throw std::invalid_argument("bad slice in '" + std::string(text) + "'");
    return {slice, VertexId::parse(text.substr(colon + 1))};
  }

  friend std::ostream& operator<<(std::ostream& os, const ZVertex& v) { return os << v.to_string(); }
};

/// tau^k(a) = (a.slice - k, a.base). translate(a, -k) is the inverse.
inline ZVertex translate(const ZVertex& a, std::int64_t k) { return {a.slice - k, a.base}; }

/// The natural embedding x -> (0, x).
template <QuiverLike G>
ZVertex embed(const G& q, const VertexId& x) {
  if (!q.contains(x)) throw UnknownVertex(x.to_string());
  return {0, x};
}

template <QuiverLike G>
std::uint64_t base_multiplicity(const G& q, const VertexId& source, const VertexId& target) {
  if constexpr (requires { q.multiplicity(source, target); }) {
    return q.multiplicity(source, target);
  } else {
    for (const auto& n : q.out_arrows(source)) {
      if (n.vertex == target) return n.multiplicity;
    }
    return 0;
  }
}

template <QuiverLike G>
std::uint64_t arrow_multiplicity(const G& q, const ZVertex& a, const ZVertex& b) {
  if (!q.contains(a.base) || !q.contains(b.base)) return 0;
  if (b.slice == a.slice) return base_multiplicity(q, a.base, b.base);
  if (b.slice == a.slice + 1) return base_multiplicity(q, b.base, a.base);
  return 0;
}

/// Arrows leaving a in ZQ, sorted by target.
template <QuiverLike G>
std::vector<Neighbor<ZVertex>> out_neighbors(const G& q, const ZVertex& a) {
  std::vector<Neighbor<ZVertex>> result;
  if (!q.contains(a.base)) return result;
  for (const auto& n : q.out_arrows(a.base)) result.push_back({{a.slice, n.vertex}, n.multiplicity});
  for (const auto& n : q.in_arrows(a.base)) result.push_back({{a.slice + 1, n.vertex}, n.multiplicity});
  std::sort(result.begin(), result.end(), [](const auto& l, const auto& r) { return l.vertex < r.vertex; });
  return result;
}

/// Arrows entering a in ZQ, sorted by source.
template <QuiverLike G>
std::vector<Neighbor<ZVertex>> in_neighbors(const G& q, const ZVertex& a) {
  std::vector<Neighbor<ZVertex>> result;
  if (!q.contains(a.base)) return result;
  for (const auto& n : q.in_arrows(a.base)) result.push_back({{a.slice, n.vertex}, n.multiplicity});
  for (const auto& n : q.out_arrows(a.base)) result.push_back({{a.slice - 1, n.vertex}, n.multiplicity});
  std::sort(result.begin(), result.end(), [](const auto& l, const auto& r) { return l.vertex < r.vertex; });
  return result;
}

/// ZQ as a (non-finite) QuiverLike view over a base quiver.
template <QuiverLike G>
class ZQuiver {
 public:
  using vertex_type = ZVertex;
  static constexpr bool is_finite = false;

  explicit ZQuiver(const G& base) : base_(&base) {}

  const G& base() const { return *base_; }
  bool contains(const ZVertex& v) const { return base_->contains(v.base); }
  std::vector<Neighbor<ZVertex>> out_arrows(const ZVertex& v) const { return out_neighbors(*base_, v); }
  std::vector<Neighbor<ZVertex>> in_arrows(const ZVertex& v) const { return in_neighbors(*base_, v); }
  std::uint64_t multiplicity(const ZVertex& a, const ZVertex& b) const { return arrow_multiplicity(*base_, a, b); }

 private:
  const G* base_;
};

/// A bounded exploration region: slices [lo, hi] (empty when lo > hi) and,
/// for integer-indexed families, base indices [first, second].
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::optional<std::pair<std::int64_t, std::int64_t>> bases;

  /// Slices [-r, r] and base indices [-r, r].
  static Window radius(std::int64_t r) { return {-r, r, std::pair{-r, r}}; }
  static Window slices(std::int64_t lo, std::int64_t hi) { return {lo, hi, std::nullopt}; }

  bool empty() const { return lo > hi; }
  bool contains_slice(std::int64_t n) const { return lo <= n && n <= hi; }
  bool contains_base_index(std::int64_t i) const { return !bases || (bases->first <= i && i <= bases->second); }
};

/// Base vertices a window covers: all of a finite quiver; for infinite
/// families the base index interval intersected with the domain.
inline std::vector<VertexId> scope_vertices(const Quiver& q, const Window&) { return q.vertices(); }

inline std::vector<VertexId> scope_vertices(const LazyQuiver& q, const Window& w) {
  const auto& dom = q.domain();
  if (dom.is_finite()) return dom.members;
  if (!w.bases) throw std::invalid_argument("window over family '" + q.tag() + "' needs a base index range");
  std::vector<VertexId> result;
  for (std::int64_t i = w.bases->first; i <= w.bases->second; ++i) {
    if (dom.contains(VertexId(i))) result.emplace_back(i);
  }
  return result;
}

inline bool in_scope(const Quiver& q, const Window&, const VertexId& v) { return q.contains(v); }

inline bool in_scope(const LazyQuiver& q, const Window& w, const VertexId& v) {
  if (!q.contains(v)) return false;
  if (q.domain().is_finite()) return true;
  return w.bases && w.contains_base_index(v.as_integer());
}

/// The full subquiver of ZQ on a window, with tau restricted to it.
struct Slab {
  BasicQuiver<ZVertex> quiver;
  Window window;

  /// tau(v) when both v and tau(v) lie in the slab; absent at the boundary.
  std::optional<ZVertex> tau(const ZVertex& v) const {
    if (!quiver.contains(v)) return std::nullopt;
    ZVertex t = translate(v, 1);
    if (!quiver.contains(t)) return std::nullopt;
    return t;
  }
  std::optional<ZVertex> tau_inverse(const ZVertex& v) const {
    if (!quiver.contains(v)) return std::nullopt;
    ZVertex t = translate(v, -1);
    if (!quiver.contains(t)) return std::nullopt;
    return t;
  }
};

template <class G>
  requires std::same_as<G, Quiver> || std::same_as<G, LazyQuiver>
Slab slab(const G& q, const Window& w) {
  QuiverBuilder<ZVertex> b;
  if (!w.empty()) {
    auto bases = scope_vertices(q, w);
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
      for (const auto& x : bases) b.add_vertex({n, x});
    }
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
      for (const auto& x : bases) {
        for (const auto& nb : out_neighbors(q, ZVertex{n, x})) {
          if (w.contains_slice(nb.vertex.slice) && in_scope(q, w, nb.vertex.base))
            b.add_arrow({n, x}, nb.vertex, nb.multiplicity);
        }
      }
    }
  }
  return {b.build(), w};
}

}  // namespace quiverlc

#endif  // QUIVERLC_ZQ_HPP
