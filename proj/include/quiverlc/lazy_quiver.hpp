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

#ifndef QUIVERLC_LAZY_QUIVER_HPP
#define QUIVERLC_LAZY_QUIVER_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quiverlc/quiver.hpp"

namespace quiverlc {

enum class DomainKind { finite, integers, naturals };

/// Vertex domain of a lazy quiver: an explicit finite set, all of Z, or N.
struct Domain {
  DomainKind kind = DomainKind::finite;
  std::vector<VertexId> members;  // sorted; finite domains only

  static Domain finite(std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {DomainKind::finite, std::move(members)};
  }
  static Domain integers() { return {DomainKind::integers, {}}; }
  static Domain naturals() { return {DomainKind::naturals, {}}; }

  bool is_finite() const { return kind == DomainKind::finite; }

  bool contains(const VertexId& v) const {
    switch (kind) {
      case DomainKind::finite:
        return std::binary_search(members.begin(), members.end(), v);
      case DomainKind::integers:
        return v.is_integer();
      case DomainKind::naturals:
        return v.is_integer() && v.as_integer() >= 0;
    }
    return false;
  }
};

/// Whether arrows may join the two unbounded ends of an integer domain
/// without passing through a given index interval. Used to keep windowed
/// searches sound: a window cannot see such arrows, so it must assume them.
struct ExteriorLinks {
  bool left_to_right = false;
  bool right_to_left = false;
};

/// A quiver whose arrows are enumerated on demand. Every vertex must have
/// finitely many in- and out-arrows, and the two enumerations must agree.
class LazyQuiver {
 public:
  using vertex_type = VertexId;
  using Enumerator = std::function<std::vector<Neighbor<VertexId>>(const VertexId&)>;
  static constexpr bool is_finite = false;

  LazyQuiver(std::string tag, Domain domain, Enumerator out, Enumerator in, ExteriorLinks links = {})
      : tag_(std::move(tag)), domain_(std::move(domain)), out_(std::move(out)), in_(std::move(in)), links_(links) {}

  const std::string& tag() const { return tag_; }
  const Domain& domain() const { return domain_; }
  const ExteriorLinks& exterior_links() const { return links_; }

  bool contains(const VertexId& v) const { return domain_.contains(v); }

  std::vector<Neighbor<VertexId>> out_arrows(const VertexId& v) const {
    if (!contains(v)) return {};
    return out_(v);
  }
  std::vector<Neighbor<VertexId>> in_arrows(const VertexId& v) const {
    if (!contains(v)) return {};
    return in_(v);
  }

  std::uint64_t multiplicity(const VertexId& source, const VertexId& target) const {
    for (const auto& n : out_arrows(source)) {
      if (n.vertex == target) return n.multiplicity;
    }
    return 0;
  }

 private:
  std::string tag_;
  Domain domain_;
  Enumerator out_;
  Enumerator in_;
  ExteriorLinks links_;
};

/// The finite Quiver behind a lazy quiver with a finite domain.
inline Quiver materialize(const LazyQuiver& q) {
  if (!q.domain().is_finite()) throw std::invalid_argument("cannot materialize infinite family '" + q.tag() + "'");
  QuiverBuilder<VertexId> b;
  for (const auto& v : q.domain().members) {
    b.add_vertex(v);
    for (const auto& n : q.out_arrows(v)) b.add_arrow(v, n.vertex, n.multiplicity);
  }
  return b.build();
}

}  // namespace quiverlc

#endif  // QUIVERLC_LAZY_QUIVER_HPP
