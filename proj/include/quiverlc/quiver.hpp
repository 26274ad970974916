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

#ifndef QUIVERLC_QUIVER_HPP
#define QUIVERLC_QUIVER_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <ranges>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quiverlc/vertex.hpp"

namespace quiverlc {

/// Thrown when an operation is handed a vertex its quiver does not contain.
class UnknownVertex : public std::invalid_argument {
 public:
  explicit UnknownVertex(const std::string& what) : std::invalid_argument("unknown vertex: " + what) {}
};

template <class V>
struct Neighbor {
  V vertex;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Anything with on-demand arrow enumeration: finite quivers, built-in
/// infinite families, and views such as ZQ.
template <class G>
concept QuiverLike = requires(const G& g, const typename G::vertex_type& v) {
  typename G::vertex_type;
  { g.contains(v) } -> std::convertible_to<bool>;
  { g.out_arrows(v) } -> std::ranges::input_range;
  { g.in_arrows(v) } -> std::ranges::input_range;
};

template <class G>
concept FiniteQuiverLike = QuiverLike<G> && G::is_finite && requires(const G& g) {
  { g.vertices() } -> std::ranges::input_range;
};

/// A finite multidigraph with explicit arrow multiplicities. Immutable once
/// built; see QuiverBuilder.
template <class V>
class BasicQuiver {
 public:
  using vertex_type = V;
  using arrow_key = std::pair<V, V>;
  static constexpr bool is_finite = true;

  BasicQuiver() = default;

  /// Throws UnknownVertex if an arrow endpoint is undeclared and
  /// std::invalid_argument if a multiplicity is zero.
  BasicQuiver(std::set<V> vertices, std::map<arrow_key, std::uint64_t> arrows)
      : vertices_(vertices.begin(), vertices.end()), arrows_(std::move(arrows)) {
    for (const auto& [key, mult] : arrows_) {
      if (mult == 0) throw std::invalid_argument("arrow multiplicity must be positive");
      if (!vertices.contains(key.first)) throw UnknownVertex(key.first.to_string());
      if (!vertices.contains(key.second)) throw UnknownVertex(key.second.to_string());
      out_[key.first].push_back({key.second, mult});
      in_[key.second].push_back({key.first, mult});
    }
  }

  const std::vector<V>& vertices() const { return vertices_; }
  const std::map<arrow_key, std::uint64_t>& arrows() const { return arrows_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  /// Number of arrows counted with multiplicity.
  std::uint64_t arrow_count() const {
    std::uint64_t n = 0;
    for (const auto& [key, mult] : arrows_) n += mult;
    return n;
  }

  bool contains(const V& v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  const std::vector<Neighbor<V>>& out_arrows(const V& v) const { return lookup(out_, v); }
  const std::vector<Neighbor<V>>& in_arrows(const V& v) const { return lookup(in_, v); }

  std::uint64_t multiplicity(const V& source, const V& target) const {
    auto it = arrows_.find({source, target});
    return it == arrows_.end() ? 0 : it->second;
  }

  friend bool operator==(const BasicQuiver& a, const BasicQuiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  static const std::vector<Neighbor<V>>& lookup(const std::map<V, std::vector<Neighbor<V>>>& m, const V& v) {
    static const std::vector<Neighbor<V>> none;
    auto it = m.find(v);
    return it == m.end() ? none : it->second;
  }

  std::vector<V> vertices_;  // sorted
  std::map<arrow_key, std::uint64_t> arrows_;
  std::map<V, std::vector<Neighbor<V>>> out_;
  std::map<V, std::vector<Neighbor<V>>> in_;
};

using Quiver = BasicQuiver<VertexId>;

template <class V>
class QuiverBuilder {
 public:
  QuiverBuilder& add_vertex(const V& v) {
    vertices_.insert(v);
    return *this;
  }

  /// Endpoints are declared implicitly; repeated calls accumulate multiplicity.
  QuiverBuilder& add_arrow(const V& source, const V& target, std::uint64_t multiplicity = 1) {
    if (multiplicity == 0) throw std::invalid_argument("arrow multiplicity must be positive");
    vertices_.insert(source);
    vertices_.insert(target);
    arrows_[{source, target}] += multiplicity;
    return *this;
  }

  BasicQuiver<V> build() const { return BasicQuiver<V>(vertices_, arrows_); }

 private:
  std::set<V> vertices_;
  std::map<std::pair<V, V>, std::uint64_t> arrows_;
};

/// Convenience for tests and small fixed quivers: `make_quiver({"x","y"}, {{"x","y"}})`.
inline Quiver make_quiver(std::initializer_list<VertexId> vertices,
                          std::initializer_list<std::pair<VertexId, VertexId>> arrows) {
  QuiverBuilder<VertexId> b;
  for (const auto& v : vertices) b.add_vertex(v);
  for (const auto& [s, t] : arrows) b.add_arrow(s, t);
  return b.build();
}

/// Arrows reversed, multiplicities kept.
template <class V>
BasicQuiver<V> opposite(const BasicQuiver<V>& q) {
  std::map<std::pair<V, V>, std::uint64_t> reversed;
  for (const auto& [key, mult] : q.arrows()) reversed[{key.second, key.first}] = mult;
  return BasicQuiver<V>(std::set<V>(q.vertices().begin(), q.vertices().end()), std::move(reversed));
}

}  // namespace quiverlc

#endif  // QUIVERLC_QUIVER_HPP
