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

#include <gtest/gtest.h>

#include <random>

#include "quiverlc/quiverlc.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace quiverlc {
namespace {

const Quiver kA2 = make_quiver({"x", "y"}, {{"x", "y"}});
const Quiver kA3 = make_quiver({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
const Quiver kCyclic = make_quiver({"a", "b"}, {{"a", "b"}, {"b", "a"}});

ZVertex zv(std::int64_t n, VertexId b) { return {n, std::move(b)}; }

std::int64_t floor_half(std::int64_t k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

TEST(BuildSection, A2IsTheEmbeddedCopy) {
  Section s = build_section(kA2, zv(0, "x"), Window{});
  EXPECT_EQ(s.selection, (std::map<VertexId, std::int64_t>{{"x", 0}, {"y", 0}}));
  EXPECT_EQ(section_quiver(kA2, s, Window{}), kA2);
}

TEST(BuildSection, PathOfLengthTwo) {
  Section s = build_section(kA3, zv(0, "a"), Window{});
  EXPECT_EQ(s.selection, (std::map<VertexId, std::int64_t>{{"a", 0}, {"b", 0}, {"c", -1}}));
  EXPECT_EQ(testing::slab_lightcone_distance(kA3, zv(0, "a"), zv(-1, "c")), 1);
  EXPECT_EQ(testing::slab_lightcone_distance(kA3, zv(-1, "c"), zv(0, "a")), 1);
  EXPECT_EQ(section_quiver(kA3, s, Window{}), make_quiver({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}}));
}

TEST(BuildSection, CenterShiftMovesEverySlice) {
  Section s0 = build_section(kA3, zv(0, "b"), Window{});
  Section s3 = build_section(kA3, zv(3, "b"), Window{});
  for (const auto& [x, j] : s0.selection) EXPECT_EQ(s3.selection.at(x), j + 3);
}

TEST(BuildSection, Preconditions) {
  try {
    build_section(kCyclic, zv(0, "a"), Window{});
    FAIL();
  } catch (const SectionError& e) {
    EXPECT_EQ(e.orbits(), (std::vector<VertexId>{"a", "b", "a"}));
  }
  EXPECT_THROW(build_section(make_quiver({"x", "y"}, {}), zv(0, "x"), Window{}), SectionError);
  EXPECT_THROW(build_section(kA2, zv(0, "q"), Window{}), UnknownVertex);
}

TEST(BuildSection, ZigZagOnTheLinearFamily) {
  auto lin = family("a-inf-inf-linear");
  Window w = Window::radius(16);
  Section s = build_section(lin, zv(0, 0), w);
  ASSERT_EQ(s.selection.size(), 33u);
  for (int k = 0; k <= 16; ++k) EXPECT_EQ(s.selection.at(k), -floor_half(k)) << k;
  for (int m = 1; m <= 16; ++m) EXPECT_EQ(s.selection.at(-m), (m + 1) / 2) << m;

  WindowedQuiver wq = windowed_section_quiver(lin, s, w);
  EXPECT_EQ(wq.boundary, (std::vector<VertexId>{-16, 16}));
  for (int k = -15; k <= 15; ++k) {
    const bool sink = wq.quiver.out_arrows(k).empty() && wq.quiver.in_arrows(k).size() == 2;
    const bool source = wq.quiver.in_arrows(k).empty() && wq.quiver.out_arrows(k).size() == 2;
    EXPECT_TRUE(sink || source) << k;
    if (k < 15) EXPECT_NE(sink, wq.quiver.out_arrows(k + 1).empty()) << k;
  }
  SectionReport r = verify_section(lin, s, w);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.grade, VerdictGrade::within_probe);
  ASSERT_TRUE(r.strong_local_finiteness.has_value());
  EXPECT_TRUE(r.strong_local_finiteness->holds);
  for (const auto& p : r.strong_local_finiteness->probes) {
    EXPECT_TRUE(p.right_complete && p.left_complete);
    EXPECT_LE(p.right_size, 4u);  // at most two on each side of the center
    EXPECT_LE(p.left_size, 4u);
  }
}

TEST(VerifySection, ShiftedOrbitIsRejected) {
  auto lin = family("a-inf-inf-linear");
  Window w = Window::radius(16);
  Section s = build_section(lin, zv(0, 0), w);
  s.selection[VertexId(2)] += 5;
  SectionReport r = verify_section(lin, s, w);
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.distance_criterion_ok);
  EXPECT_FALSE(r.arrow_criterion_ok);
  ASSERT_FALSE(r.negative_pairs.empty());
  for (const auto& p : r.negative_pairs) {
    EXPECT_LT(p.distance, 0);
    EXPECT_EQ(lightcone_distance_zq_oracle(lin, p.from, p.to, Window::radius(24)), ExtDistance::finite(p.distance));
  }
  EXPECT_THROW(section_quiver(lin, s, w), InvalidSection);

  VerifyOptions first;
  first.report_all = false;
  SectionReport one = verify_section(lin, s, w, first);
  EXPECT_EQ(one.negative_pairs.size(), 1u);
  EXPECT_EQ(one.arrow_failures.size(), 1u);
}

TEST(VerifySection, CoverageFailures) {
  Section partial;
  partial.selection = {{"x", 0}};
  SectionReport r = verify_section(kA2, partial, Window{});
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.missing_orbits, (std::vector<VertexId>{"y"}));
  partial.selection = {{"x", 0}, {"y", 0}, {"z", 0}};
  r = verify_section(kA2, partial, Window{});
  EXPECT_EQ(r.extra_orbits, (std::vector<VertexId>{"z"}));
}

TEST(VerifySection, CyclicQuiver) {
  // The embedded copy of Q is a section even when Q has cycles; it is just
  // not strongly locally finite.
  Section s;
  s.selection = {{"a", 0}, {"b", 0}};
  SectionReport r = verify_section(kCyclic, s, Window{});
  EXPECT_TRUE(r.valid);
  ASSERT_TRUE(r.strong_local_finiteness.has_value());
  EXPECT_FALSE(r.strong_local_finiteness->holds);
  s.selection = {{"a", 0}, {"b", 1}};
  r = verify_section(kCyclic, s, Window{});
  EXPECT_FALSE(r.valid);
  ASSERT_FALSE(r.negative_pairs.empty());
  EXPECT_EQ(r.negative_pairs.front().distance, -1);
}

TEST(LightconeSection, A2) {
  EXPECT_EQ(lightcone_section(kA2, zv(0, "x"), Window{}).selection,
            (std::map<VertexId, std::int64_t>{{"x", 0}, {"y", 0}}));
  EXPECT_EQ(lightcone_section(kA2, zv(0, "y"), Window{}, ConeSide::left).selection,
            (std::map<VertexId, std::int64_t>{{"x", 0}, {"y", 0}}));
}

// Both light cone sections and the constructed section verify, and the two
// criteria always agree.
TEST(Sections, CorpusSectionsVerify) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 10, .max_arrows = 16, .acyclic = true});
    for (const auto& x : q.vertices()) {
      ZVertex c{i % 3 - 1, x};
      for (const Section& s : {build_section(q, c, Window{}), lightcone_section(q, c, Window{}, ConeSide::right),
                               lightcone_section(q, c, Window{}, ConeSide::left)}) {
        SectionReport r = verify_section(q, s, Window{});
        EXPECT_TRUE(r.valid);
        EXPECT_EQ(r.distance_criterion_ok, r.arrow_criterion_ok);
        ASSERT_TRUE(r.strong_local_finiteness.has_value());
        EXPECT_TRUE(r.strong_local_finiteness->holds);
        EXPECT_EQ(section_quiver(q, s, Window{}).vertex_count(), q.vertex_count());
      }
    }
  }
}

// Random selections: the pairwise distance criterion and the arrow condition
// give the same verdict.
TEST(Sections, CriteriaAgreeOnRandomSelections) {
  std::mt19937_64 rng(42);
  std::size_t valid = 0;
  for (int i = 0; i < 400; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 6, .max_arrows = 9, .loop_chance = 0.1});
    Section s;
    std::uniform_int_distribution<int> slice(-1, 1);
    for (const auto& x : q.vertices()) s.selection[x] = slice(rng);
    SectionReport r = verify_section(q, s, Window{});
    EXPECT_EQ(r.distance_criterion_ok, r.arrow_criterion_ok) << serialize_quiver(q);
    valid += r.valid;
  }
  EXPECT_GT(valid, 0u);
}

TEST(StrongLocalFiniteness, Examples) {
  auto cyc = is_strongly_locally_finite(kCyclic);
  EXPECT_FALSE(cyc.holds);
  EXPECT_EQ(cyc.cycle, (std::vector<VertexId>{"a", "b", "a"}));
  EXPECT_TRUE(is_strongly_locally_finite(kA3).holds);
  EXPECT_FALSE(is_strongly_locally_finite(make_quiver({"x", "y"}, {})).holds);

  auto lin = family("a-inf-inf-linear");
  Window w = Window::radius(16);
  auto r = is_strongly_locally_finite(lin, w, 0, default_probe_radius(w));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.grade, VerdictGrade::within_probe);
  EXPECT_FALSE(r.probes.front().right_complete && r.probes.front().left_complete);
}

TEST(Classify, Examples) {
  auto ok = classify(kA3, "a");
  EXPECT_EQ(ok.verdict, Classification::satisfied);
  EXPECT_EQ(ok.grade, VerdictGrade::exact);
  auto bad = classify(kCyclic, "a");
  EXPECT_EQ(bad.verdict, Classification::fails);
  EXPECT_FALSE(bad.cycle.empty());

  auto f1 = classify(family("figure1-right"), 0, Window::radius(8), 8);
  EXPECT_EQ(f1.verdict, Classification::counter_evidence);
  EXPECT_EQ(f1.grade, VerdictGrade::within_probe);
  ASSERT_GE(f1.spheres.size(), 2u);
  EXPECT_FALSE(f1.spheres[1].complete);

  auto lin = classify(family("a-inf-inf-linear"), 0, Window::radius(8), 8);
  EXPECT_EQ(lin.verdict, Classification::satisfied);
  EXPECT_EQ(lin.grade, VerdictGrade::within_probe);

  auto cyc = classify(family("a1-tilde-cyclic"), "a", Window::radius(4), 4);
  EXPECT_EQ(cyc.verdict, Classification::fails);
}

TEST(Classify, FiniteCorpusMatchesAcyclicity) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 9, .max_arrows = 14});
    auto r = classify(q, q.vertices().front());
    EXPECT_EQ(r.verdict == Classification::satisfied, is_acyclic(q).acyclic);
    std::size_t total = 0;
    for (const auto& s : r.spheres) {
      EXPECT_TRUE(s.complete);
      total += s.size;
    }
    EXPECT_EQ(total, q.vertex_count());
  }
}

}  // namespace
}  // namespace quiverlc
