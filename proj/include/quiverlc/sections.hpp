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

// Sections of ZQ: full subquivers meeting every tau-orbit once whose
// embedding extends to ZQ' = ZQ. A subquiver meeting every orbit once is a
// section iff d(a, b) >= 0 for all of its vertices a, b; equivalently, for
// every arrow a -> z with a selected, z or tau(z) is selected, and for every
// arrow z -> a, z or tau^{-1}(z) is.

#ifndef QUIVERLC_SECTIONS_HPP
#define QUIVERLC_SECTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverlc/distances.hpp"
#include "quiverlc/lazy_quiver.hpp"
#include "quiverlc/quiver.hpp"
#include "quiverlc/structure.hpp"
#include "quiverlc/window_graph.hpp"
#include "quiverlc/zq.hpp"

namespace quiverlc {

/// One slice per tau-orbit: orbit x is represented by (selection[x], x).
struct Section {
  std::map<VertexId, std::int64_t> selection;
  std::optional<ZVertex> center;

  bool contains(const ZVertex& v) const {
    auto it = selection.find(v.base);
    return it != selection.end() && it->second == v.slice;
  }

  std::vector<ZVertex> vertices() const {
    std::vector<ZVertex> result;
    for (const auto& [base, slice] : selection) result.push_back({slice, base});
    return result;
  }

  friend bool operator==(const Section&, const Section&) = default;
};

/// Construction preconditions failed, or some orbits could not be resolved
/// inside the window.
class SectionError : public std::runtime_error {
 public:
  SectionError(const std::string& what, std::vector<VertexId> orbits = {})
      : std::runtime_error(what), orbits_(std::move(orbits)) {}
  const std::vector<VertexId>& orbits() const { return orbits_; }

 private:
  std::vector<VertexId> orbits_;
};

class InvalidSection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline WindowGraph scoped_graph(const Quiver& q, const Window&) { return WindowGraph::of(q); }
inline WindowGraph scoped_graph(const LazyQuiver& q, const Window& w) { return WindowGraph::of(q, w); }

inline std::optional<std::vector<VertexId>> scoped_cycle(const Quiver& q, const WindowGraph&) {
  auto r = is_acyclic(q);
  if (r.acyclic) return std::nullopt;
  return r.cycle;
}
inline std::optional<std::vector<VertexId>> scoped_cycle(const LazyQuiver&, const WindowGraph& g) {
  return g.inner_cycle();
}

inline VerdictGrade scoped_grade(const Quiver&) { return VerdictGrade::exact; }
inline VerdictGrade scoped_grade(const LazyQuiver& q) {
  return q.domain().is_finite() ? VerdictGrade::exact : VerdictGrade::within_probe;
}

/// Right light cone distances d_Q(x, .) per source, cached.
class ScopedDistances {
 public:
  explicit ScopedDistances(const WindowGraph& g) : g_(&g) {}

  ExtDistance operator()(const VertexId& x, const VertexId& y) {
    std::size_t sx = g_->node(x);
    auto it = cache_.find(sx);
    if (it == cache_.end()) it = cache_.emplace(sx, cone_profile(*g_, sx, ConeSide::right)).first;
    return it->second.distance(g_->node(y));
  }

 private:
  const WindowGraph* g_;
  std::map<std::size_t, ConeProfile> cache_;
};

inline void require_center(const WindowGraph& g, const ZVertex& center) {
  if (!g.contains(center.base)) throw UnknownVertex(center.base.to_string());
}

}  // namespace detail

/// For every orbit x in scope, picks the slice j with
/// d(center, (j,x)) = floor(d/2), d the round trip distance from the center
/// to the orbit; then d((j,x), center) = ceil(d/2). The shift law makes j
/// unique: j = d_Q(c, x) + center.slice - floor(d/2).
template <class G>
  requires std::same_as<G, Quiver> || std::same_as<G, LazyQuiver>
Section build_section(const G& q, const ZVertex& center, const Window& scope) {
  WindowGraph g = detail::scoped_graph(q, scope);
  detail::require_center(g, center);
  if (auto cycle = detail::scoped_cycle(q, g)) {
    std::vector<VertexId> witness = *cycle;
    throw SectionError("quiver has an oriented cycle", std::move(witness));
  }
  if (!g.inner_connected()) throw SectionError("quiver is not connected within the scope");

  ConeProfile right = cone_profile(g, center.base, ConeSide::right);
  ConeProfile left = cone_profile(g, center.base, ConeSide::left);

  Section s;
  s.center = center;
  std::vector<VertexId> unresolved;
  for (std::size_t i = 0; i < g.inner_count(); ++i) {
    if (!right.certified(i) || !left.certified(i) || !right.upper[i] || !left.upper[i]) {
      unresolved.push_back(g.inner()[i]);
      continue;
    }
    std::int64_t forward = *right.upper[i];
    std::int64_t roundtrip = forward + *left.upper[i];
    s.selection[g.inner()[i]] = forward + center.slice - roundtrip / 2;
  }
  if (!unresolved.empty())
    throw SectionError("distances to some orbits are not certified inside the window", std::move(unresolved));
  return s;
}

/// The right (or left) light cone centred on `center` as a section: each
/// orbit's cone representative.
template <class G>
  requires std::same_as<G, Quiver> || std::same_as<G, LazyQuiver>
Section lightcone_section(const G& q, const ZVertex& center, const Window& scope, ConeSide side = ConeSide::right) {
  WindowGraph g = detail::scoped_graph(q, scope);
  detail::require_center(g, center);
  if (!g.inner_connected()) throw SectionError("quiver is not connected within the scope");
  ConeProfile p = cone_profile(g, center.base, side);
  Section s;
  s.center = center;
  std::vector<VertexId> unresolved;
  for (std::size_t i = 0; i < g.inner_count(); ++i) {
    if (!p.certified(i) || !p.upper[i]) {
      unresolved.push_back(g.inner()[i]);
      continue;
    }
    s.selection[g.inner()[i]] = side == ConeSide::right ? center.slice + *p.upper[i] : center.slice - *p.upper[i];
  }
  if (!unresolved.empty())
    throw SectionError("light cone representatives are not certified inside the window", std::move(unresolved));
  return s;
}

/// Strong local finiteness: connected, locally finite, no rays or corays.
struct SlfReport {
  struct Probe {
    std::int64_t radius = 0;
    std::size_t right_size = 0;
    bool right_complete = true;
    std::size_t left_size = 0;
    bool left_complete = true;
  };

  bool holds = false;
  VerdictGrade grade = VerdictGrade::exact;
  bool connected = true;
  bool acyclic = true;
  std::vector<VertexId> cycle;
  std::optional<VertexId> base;
  std::vector<Probe> probes;
  std::string reason;
};

/// Exact for finite quivers: local finiteness is automatic and path
/// finiteness is acyclicity.
inline SlfReport is_strongly_locally_finite(const Quiver& q) {
  SlfReport r;
  r.connected = is_connected(q);
  auto acyc = is_acyclic(q);
  r.acyclic = acyc.acyclic;
  r.cycle = acyc.cycle;
  r.holds = r.connected && r.acyclic;
  if (!r.connected) r.reason = "not connected";
  if (!r.acyclic) r.reason = "oriented cycle";
  return r;
}

/// Probe-grade check on a window: no cycle inside it, connected inside it,
/// and every right and left light cone sphere around `base` of radius up to
/// probe_radius is complete (finite, and seen entirely inside the window).
inline SlfReport is_strongly_locally_finite(const WindowGraph& g, const VertexId& base, std::int64_t probe_radius) {
  SlfReport r;
  r.grade = g.exterior_count() == 0 ? VerdictGrade::exact : VerdictGrade::within_probe;
  r.base = base;
  r.connected = g.inner_connected();
  if (auto cycle = g.inner_cycle()) {
    r.acyclic = false;
    r.cycle = *cycle;
  }
  bool all_complete = true;
  for (std::int64_t n = 0; n <= probe_radius; ++n) {
    auto right = sphere(g, base, n, SphereKind::right);
    auto left = sphere(g, base, n, SphereKind::left);
    r.probes.push_back({n, right.members.size(), right.complete, left.members.size(), left.complete});
    all_complete = all_complete && right.complete && left.complete;
  }
  r.holds = r.connected && r.acyclic && all_complete;
  if (!all_complete) r.reason = "light cone sphere not finite within the window";
  if (!r.connected) r.reason = "not connected within the window";
  if (!r.acyclic) r.reason = "oriented cycle";
  return r;
}

inline SlfReport is_strongly_locally_finite(const WindowedQuiver& wq, const VertexId& base,
                                            std::int64_t probe_radius) {
  return is_strongly_locally_finite(WindowGraph::of(wq), base, probe_radius);
}

inline SlfReport is_strongly_locally_finite(const LazyQuiver& q, const Window& w, const VertexId& base,
                                            std::int64_t probe_radius) {
  return is_strongly_locally_finite(WindowGraph::of(q, w), base, probe_radius);
}

/// Default probe depth for a window: a third of its base half-width, so the
/// probed spheres sit well inside it.
inline std::int64_t default_probe_radius(const Window& w) {
  if (!w.bases) return 0;
  return std::max<std::int64_t>(0, (w.bases->second - w.bases->first) / 6);
}

struct VerifyOptions {
  std::size_t sample_budget = 200'000;  // ordered pairs checked for infinite families
  bool report_all = true;               // false: stop at the first witness per criterion
  std::optional<std::int64_t> probe_radius;
};

struct SectionReport {
  struct PairWitness {
    ZVertex from;
    ZVertex to;
    std::int64_t distance = 0;
  };
  struct ArrowWitness {
    ZVertex selected;
    ZVertex neighbor;
    bool outgoing = true;  // selected -> neighbor, otherwise neighbor -> selected
  };

  bool valid = false;
  VerdictGrade grade = VerdictGrade::exact;
  bool coverage_ok = true;
  bool distance_criterion_ok = true;
  bool arrow_criterion_ok = true;
  std::vector<VertexId> missing_orbits;
  std::vector<VertexId> extra_orbits;
  std::vector<PairWitness> negative_pairs;
  std::vector<ArrowWitness> arrow_failures;
  std::size_t pairs_checked = 0;
  std::size_t pairs_unresolved = 0;
  std::optional<SlfReport> strong_local_finiteness;
};

namespace detail {

template <class G>
void check_arrow_condition(const G& q, const Section& s, const Window& scope, bool report_all, SectionReport& r) {
  for (const auto& a : s.vertices()) {
    if (!in_scope(q, scope, a.base)) continue;
    for (const auto& nb : out_neighbors(q, a)) {
      const ZVertex& z = nb.vertex;
      if (!in_scope(q, scope, z.base) || !s.selection.contains(z.base)) continue;
      if (s.contains(z) || s.contains(translate(z, 1))) continue;
      r.arrow_criterion_ok = false;
      r.arrow_failures.push_back({a, z, true});
      if (!report_all) return;
    }
    for (const auto& nb : in_neighbors(q, a)) {
      const ZVertex& z = nb.vertex;
      if (!in_scope(q, scope, z.base) || !s.selection.contains(z.base)) continue;
      if (s.contains(z) || s.contains(translate(z, -1))) continue;
      r.arrow_criterion_ok = false;
      r.arrow_failures.push_back({a, z, false});
      if (!report_all) return;
    }
  }
}

template <class G>
void check_coverage(const G& q, const Section& s, const Window& scope, SectionReport& r) {
  auto scope_list = scope_vertices(q, scope);
  std::set<VertexId> in(scope_list.begin(), scope_list.end());
  for (const auto& v : scope_list) {
    if (!s.selection.contains(v)) r.missing_orbits.push_back(v);
  }
  for (const auto& [base, slice] : s.selection) {
    if (!in.contains(base)) r.extra_orbits.push_back(base);
  }
  r.coverage_ok = r.missing_orbits.empty() && r.extra_orbits.empty();
}

template <class G>
BasicQuiver<VertexId> induced_section_quiver(const G& q, const Section& s, const Window& scope,
                                             std::vector<VertexId>* boundary) {
  QuiverBuilder<VertexId> b;
  for (const auto& [x, slice] : s.selection) {
    b.add_vertex(x);
    bool on_boundary = false;
    for (const auto& nb : out_neighbors(q, ZVertex{slice, x})) {
      if (!in_scope(q, scope, nb.vertex.base)) {
        on_boundary = true;
        continue;
      }
      if (s.contains(nb.vertex)) b.add_arrow(x, nb.vertex.base, nb.multiplicity);
    }
    for (const auto& nb : in_neighbors(q, ZVertex{slice, x})) {
      if (!in_scope(q, scope, nb.vertex.base)) on_boundary = true;
    }
    if (on_boundary && boundary) boundary->push_back(x);
  }
  return b.build();
}

}  // namespace detail

/// Checks orbit coverage, d(a, b) >= 0 over selected pairs (all pairs for
/// finite quivers, a deterministic sample for families) and the arrow
/// condition, and attaches a strong local finiteness sub-report. Failures
/// are verdicts, never exceptions.
template <class G>
  requires std::same_as<G, Quiver> || std::same_as<G, LazyQuiver>
SectionReport verify_section(const G& q, const Section& s, const Window& scope, const VerifyOptions& opts = {}) {
  SectionReport r;
  r.grade = detail::scoped_grade(q);
  detail::check_coverage(q, s, scope, r);

  WindowGraph g = detail::scoped_graph(q, scope);
  detail::ScopedDistances dist(g);

  std::vector<ZVertex> selected;
  for (const auto& v : s.vertices()) {
    if (g.contains(v.base)) selected.push_back(v);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t total = selected.size() * selected.size();
  if (r.grade == VerdictGrade::exact || total <= opts.sample_budget) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      for (std::size_t j = 0; j < selected.size(); ++j) pairs.push_back({i, j});
    }
  } else {
    std::mt19937_64 rng(0x5ec7'10a5ULL);
    std::uniform_int_distribution<std::size_t> pick(0, selected.size() - 1);
    for (std::size_t k = 0; k < opts.sample_budget; ++k) pairs.push_back({pick(rng), pick(rng)});
  }

  for (auto [i, j] : pairs) {
    const ZVertex& a = selected[i];
    const ZVertex& b = selected[j];
    ExtDistance d = dist(a.base, b.base).shifted(a.slice - b.slice);
    if (d.is_at_least()) {
      // A lower bound of 0 or more still settles the criterion.
      if (d.bound() >= 0) {
        ++r.pairs_checked;
      } else {
        ++r.pairs_unresolved;
      }
      continue;
    }
    ++r.pairs_checked;
    if (d.is_finite() && d.value() < 0) {
      r.distance_criterion_ok = false;
      if (opts.report_all || r.negative_pairs.empty()) r.negative_pairs.push_back({a, b, d.value()});
    }
  }

  detail::check_arrow_condition(q, s, scope, opts.report_all, r);
  r.valid = r.coverage_ok && r.distance_criterion_ok && r.arrow_criterion_ok;

  if (r.coverage_ok) {
    if (r.grade == VerdictGrade::exact) {
      r.strong_local_finiteness = is_strongly_locally_finite(detail::induced_section_quiver(q, s, scope, nullptr));
    } else {
      WindowedQuiver wq;
      wq.quiver = detail::induced_section_quiver(q, s, scope, &wq.boundary);
      VertexId base = s.center ? s.center->base : s.selection.begin()->first;
      if (!wq.quiver.contains(base)) base = s.selection.begin()->first;
      r.strong_local_finiteness =
          is_strongly_locally_finite(wq, base, opts.probe_radius.value_or(default_probe_radius(scope)));
    }
  }
  return r;
}

/// The section as a standalone quiver on the base vertex ids. Throws
/// InvalidSection unless the selection covers the scope and satisfies the
/// arrow condition.
template <class G>
  requires std::same_as<G, Quiver> || std::same_as<G, LazyQuiver>
Quiver section_quiver(const G& q, const Section& s, const Window& scope) {
  SectionReport r;
  detail::check_coverage(q, s, scope, r);
  detail::check_arrow_condition(q, s, scope, false, r);
  if (!r.coverage_ok || !r.arrow_criterion_ok) throw InvalidSection("selection is not a section of ZQ");
  return detail::induced_section_quiver(q, s, scope, nullptr);
}

/// Like section_quiver, additionally listing the vertices whose ZQ
/// neighbourhood reaches outside the scope.
inline WindowedQuiver windowed_section_quiver(const LazyQuiver& q, const Section& s, const Window& scope) {
  SectionReport r;
  detail::check_coverage(q, s, scope, r);
  detail::check_arrow_condition(q, s, scope, false, r);
  if (!r.coverage_ok || !r.arrow_criterion_ok) throw InvalidSection("selection is not a section of ZQ");
  WindowedQuiver wq;
  wq.quiver = detail::induced_section_quiver(q, s, scope, &wq.boundary);
  return wq;
}

enum class Classification {
  satisfied,         // no oriented cycle and finite round trip spheres
  fails,             // oriented cycle found
  counter_evidence,  // a round trip sphere is not finite within the window
};

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::satisfied:
      return "satisfied";
    case Classification::fails:
      return "fails";
    case Classification::counter_evidence:
      return "counter_evidence";
  }
  return "?";
}

struct ClassificationReport {
  struct SphereProbe {
    std::int64_t radius = 0;
    std::size_t size = 0;
    bool complete = true;
  };

  Classification verdict = Classification::satisfied;
  VerdictGrade grade = VerdictGrade::exact;
  VertexId base;
  bool acyclic = true;
  std::vector<VertexId> cycle;
  bool connected = true;
  std::vector<SphereProbe> spheres;
};

namespace detail {

inline void fill_roundtrip_spheres(const WindowGraph& g, const VertexId& base, std::int64_t max_radius,
                                   ClassificationReport& r) {
  ConeProfile right = cone_profile(g, base, ConeSide::right);
  ConeProfile left = cone_profile(g, base, ConeSide::left);
  auto outside = roundtrip_exterior_bound(right, left);
  std::map<std::int64_t, std::size_t> sizes;
  std::int64_t realized = 0;
  for (std::size_t i = 0; i < g.inner_count(); ++i) {
    if (right.upper[i] && left.upper[i]) {
      std::int64_t d = *right.upper[i] + *left.upper[i];
      ++sizes[d];
      realized = std::max(realized, d);
    }
  }
  std::int64_t top = max_radius >= 0 ? max_radius : realized;
  for (std::int64_t n = 0; n <= top; ++n) {
    r.spheres.push_back({n, sizes.contains(n) ? sizes[n] : 0, !outside || *outside > n});
  }
}

}  // namespace detail

/// Finite quivers: exact. The conditions hold iff there is no oriented
/// cycle, since every sphere of a finite quiver is finite. Spheres are
/// reported for every realized radius.
inline ClassificationReport classify(const Quiver& q, const VertexId& base) {
  if (!q.contains(base)) throw UnknownVertex(base.to_string());
  ClassificationReport r;
  r.base = base;
  auto acyc = is_acyclic(q);
  r.acyclic = acyc.acyclic;
  r.cycle = acyc.cycle;
  r.connected = is_connected(q);
  r.verdict = r.acyclic ? Classification::satisfied : Classification::fails;
  detail::fill_roundtrip_spheres(WindowGraph::of(q), base, -1, r);
  return r;
}

/// Families: acyclicity inside the window plus round trip sphere probes for
/// radii 0..max_radius. Never a universal verdict for an infinite domain.
inline ClassificationReport classify(const LazyQuiver& q, const VertexId& base, const Window& w,
                                     std::int64_t max_radius) {
  if (q.domain().is_finite()) {
    auto r = classify(materialize(q), base);
    return r;
  }
  if (!in_scope(q, w, base)) throw UnknownVertex(base.to_string());
  WindowGraph g = WindowGraph::of(q, w);
  ClassificationReport r;
  r.grade = VerdictGrade::within_probe;
  r.base = base;
  r.connected = g.inner_connected();
  if (auto cycle = g.inner_cycle()) {
    r.acyclic = false;
    r.cycle = *cycle;
  }
  detail::fill_roundtrip_spheres(g, base, max_radius, r);
  bool truncated = std::any_of(r.spheres.begin(), r.spheres.end(), [](const auto& s) { return !s.complete; });
  if (!r.acyclic) {
    r.verdict = Classification::fails;
  } else if (truncated) {
    r.verdict = Classification::counter_evidence;
  } else {
    r.verdict = Classification::satisfied;
  }
  return r;
}

}  // namespace quiverlc

#endif  // QUIVERLC_SECTIONS_HPP
