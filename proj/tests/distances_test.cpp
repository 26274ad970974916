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
#include <set>

#include "quiverlc/quiverlc.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace quiverlc {
namespace {

const Quiver kA2 = make_quiver({"x", "y"}, {{"x", "y"}});
const Quiver kCyclic = make_quiver({"a", "b"}, {{"a", "b"}, {"b", "a"}});

ExtDistance fin(std::int64_t n) { return ExtDistance::finite(n); }
ZVertex zv(std::int64_t n, VertexId b) { return {n, std::move(b)}; }

TEST(ExtDistance, Arithmetic) {
  EXPECT_EQ(fin(2) + fin(3), fin(5));
  EXPECT_EQ(fin(2) + ExtDistance::infinite(), ExtDistance::infinite());
  EXPECT_EQ(ExtDistance::at_least(4) + fin(1), ExtDistance::at_least(5));
  EXPECT_EQ(ExtDistance::at_least(4) + ExtDistance::infinite(), ExtDistance::infinite());
  EXPECT_EQ(fin(2).shifted(-3), fin(-1));
  EXPECT_EQ(ExtDistance::infinite().shifted(7), ExtDistance::infinite());
  EXPECT_EQ(ExtDistance::at_least(3).to_string(), ">=3");
  EXPECT_THROW(ExtDistance::infinite().value(), std::logic_error);
  EXPECT_THROW(fin(1).bound(), std::logic_error);
}

TEST(LightCone, BaseExamples) {
  EXPECT_EQ(lightcone_distance_q(kA2, "x", "y"), fin(0));
  EXPECT_EQ(lightcone_distance_q(kA2, "y", "x"), fin(1));
  Quiver two = make_quiver({"x", "y", "z"}, {{"x", "y"}});
  EXPECT_EQ(lightcone_distance_q(two, "x", "z"), ExtDistance::infinite());
  EXPECT_THROW(lightcone_distance_q(kA2, "x", "q"), UnknownVertex);
}

TEST(LightCone, FamilyExamples) {
  auto lin = family("a-inf-inf-linear");
  Window w = Window::radius(32);
  EXPECT_EQ(lightcone_distance_q(lin, 0, -3, w), fin(3));
  EXPECT_EQ(lightcone_distance_q(lin, -3, 0, w), fin(0));
  EXPECT_EQ(lightcone_distance_zq(lin, zv(0, 0), zv(2, -3), w), fin(1));
  auto f1 = family("figure1-right");
  for (int k = 1; k <= 30; ++k) EXPECT_EQ(lightcone_distance_q(f1, k, 0, w), fin(1)) << k;
  for (int k = 1; k <= 30; ++k) EXPECT_EQ(roundtrip_distance(f1, VertexId(0), VertexId(k), w), fin(1)) << k;
  for (int k = -12; k <= 12; ++k) EXPECT_EQ(roundtrip_distance(lin, VertexId(0), VertexId(k), w), fin(std::abs(k)));
  // Where the budgeted search does settle, it agrees with the window.
  EXPECT_EQ(lightcone_distance_q(lin, -3, 0, 100), fin(0));
}

TEST(LightCone, BudgetGivesSoundLowerBound) {
  auto lin = family("a-inf-inf-linear");
  ExtDistance capped = lightcone_distance_q(lin, 0, -1000, 50);
  ASSERT_TRUE(capped.is_at_least());
  EXPECT_LE(capped.bound(), 1000);
  EXPECT_GE(capped.bound(), 0);
  EXPECT_LE(capped.expansions(), 50u);
  // The free ray 0 -> 1 -> 2 -> ... keeps an unbounded search at distance 0.
  EXPECT_EQ(lightcone_distance_q(lin, 0, -1000, 20000), ExtDistance::at_least(0));
  EXPECT_EQ(lightcone_distance_q(lin, 0, -1000, Window::radius(1000)), fin(1000));
  EXPECT_EQ(tighter(ExtDistance::at_least(0), fin(7)), fin(7));
  EXPECT_EQ(tighter(ExtDistance::at_least(4), ExtDistance::at_least(2)), ExtDistance::at_least(4));
  // An exhausted search is a certificate even under a small budget.
  EXPECT_EQ(lightcone_distance_q(kA2, "y", "x", 5), fin(1));
}

TEST(LightCone, ZQExamples) {
  EXPECT_EQ(lightcone_distance_zq(kA2, zv(0, "x"), zv(0, "y")), fin(0));
  EXPECT_EQ(lightcone_distance_zq(kA2, zv(0, "x"), zv(1, "y")), fin(-1));
  EXPECT_EQ(testing::slab_lightcone_distance(kA2, zv(0, "x"), zv(1, "y")), -1);

  bool negative = false;
  Slab s = slab(kCyclic, Window::slices(0, 2));
  for (const auto& [key, m] : s.quiver.arrows()) {
    negative = negative || lightcone_distance_zq(kCyclic, key.first, key.second) == fin(-1);
  }
  EXPECT_TRUE(negative);
}

TEST(LightCone, ShiftLaw) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 8, .max_arrows = 14});
    for (const auto& x : q.vertices()) {
      for (const auto& y : q.vertices()) {
        ExtDistance base = lightcone_distance_zq(q, zv(0, x), zv(0, y));
        for (int n = -3; n <= 3; ++n) {
          EXPECT_EQ(lightcone_distance_zq(q, zv(0, x), translate(zv(0, y), n)), base.shifted(n));
          EXPECT_EQ(lightcone_distance_zq(q, translate(zv(0, x), n), zv(0, y)), base.shifted(-n));
        }
      }
    }
  }
}

TEST(LightCone, ZeroOneSearchMatchesBruteForce) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 80; ++i) {
    Quiver q = testing::random_quiver(
        rng, {.max_vertices = 8, .max_arrows = 12, .connected = i % 4 != 0, .loop_chance = 0.2});
    for (const auto& x : q.vertices()) {
      auto row = testing::brute_lightcone_row(q, x);
      for (const auto& y : q.vertices()) {
        ExtDistance d = lightcone_distance_q(q, x, y);
        if (auto it = row.find(y); it != row.end()) {
          EXPECT_EQ(d, fin(it->second));
        } else {
          EXPECT_EQ(d, ExtDistance::infinite());
        }
      }
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(lightcone_distance_zq_oracle(kA2, zv(0, "x"), zv(0, "y"), Window::slices(0, 3)), fin(0));
  EXPECT_EQ(lightcone_distance_zq_oracle(kCyclic, zv(0, "a"), zv(0, "b"), Window::slices(0, 4)), fin(0));
  EXPECT_EQ(lightcone_distance_zq_oracle(kCyclic, zv(0, "b"), zv(0, "a"), Window::slices(0, 4)), fin(0));
  // The reached set of y never gets back to slice 0 of x: d((0,y),(0,x)) = 1.
  EXPECT_EQ(lightcone_distance_zq_oracle(kA2, zv(0, "y"), zv(0, "x"), Window::slices(0, 3)), fin(1));
  Quiver two = make_quiver({"x", "y", "z"}, {{"x", "y"}});
  EXPECT_EQ(lightcone_distance_zq_oracle(two, zv(0, "x"), zv(0, "z"), Window::slices(0, 4)), ExtDistance::infinite());
  EXPECT_THROW(lightcone_distance_zq_oracle(kA2, zv(0, "y"), zv(0, "x"), Window::slices(0, 0)), WindowTooSmall);
}

TEST(Oracle, MatchesReductionAndBruteForce) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 7, .max_arrows = 12, .connected = i % 5 != 0});
    const auto n = static_cast<std::int64_t>(q.vertex_count());
    Window w = Window::slices(0, 3 + n + 2);
    for (const auto& x : q.vertices()) {
      for (const auto& y : q.vertices()) {
        for (std::int64_t i1 = 0; i1 <= 3; ++i1) {
          for (std::int64_t j1 = 0; j1 <= 3; ++j1) {
            ZVertex a{i1, x}, b{j1, y};
            ExtDistance red = lightcone_distance_zq(q, a, b);
            EXPECT_EQ(lightcone_distance_zq_oracle(q, a, b, w), red);
            auto brute = testing::slab_lightcone_distance(q, a, b);
            EXPECT_EQ(brute ? fin(*brute) : ExtDistance::infinite(), red);
          }
        }
      }
    }
  }
}

TEST(Oracle, FamilyWindow) {
  auto lin = family("a-inf-inf-linear");
  Window w = Window::radius(8);
  EXPECT_EQ(lightcone_distance_zq_oracle(lin, zv(0, 0), zv(0, -3), w), fin(3));
  EXPECT_EQ(lightcone_distance_zq_oracle(lin, zv(0, -3), zv(0, 0), w), fin(0));
  auto f1 = family("figure1-right");
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(lightcone_distance_zq_oracle(f1, zv(0, k), zv(0, 0), w), lightcone_distance_zq(f1, zv(0, k), zv(0, 0), w));
  }
}

TEST(LeftAndRoundTrip, Examples) {
  EXPECT_EQ(left_lightcone_distance(kA2, "y", "x"), fin(0));
  EXPECT_EQ(left_lightcone_distance(kA2, "x", "y"), fin(1));
  EXPECT_EQ(roundtrip_distance(kA2, "x", "y"), fin(1));
  EXPECT_EQ(roundtrip_distance(kA2, "x", "x"), fin(0));
  EXPECT_EQ(roundtrip_distance(kCyclic, "a", "b"), fin(0));
}

TEST(LeftAndRoundTrip, SymmetryAndOrbitInvariance) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 40; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 8, .max_arrows = 14});
    for (const auto& x : q.vertices()) {
      for (const auto& y : q.vertices()) {
        EXPECT_EQ(left_lightcone_distance(q, x, y), lightcone_distance_q(q, y, x));
        EXPECT_EQ(roundtrip_distance(q, x, y), roundtrip_distance(q, y, x));
        for (int n = -2; n <= 2; ++n) {
          EXPECT_EQ(roundtrip_distance(q, zv(n, x), zv(-n, y)), roundtrip_distance(q, x, y));
        }
      }
    }
  }
}

TEST(Spheres, FiniteExamples) {
  auto s = roundtrip_sphere(kA2, "x", 1);
  EXPECT_EQ(s.members, (std::vector<VertexId>{"y"}));
  EXPECT_TRUE(s.complete);
  std::mt19937_64 rng(35);
  for (int i = 0; i < 20; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 9, .acyclic = true});
    for (const auto& x : q.vertices()) EXPECT_EQ(roundtrip_sphere(q, x, 0).members, std::vector<VertexId>{x});
  }
  EXPECT_TRUE(roundtrip_sphere(kA2, "x", -1).members.empty());
}

TEST(Spheres, SpheresPartitionTheComponent) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 30; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 9, .max_arrows = 14});
    for (const auto& x : q.vertices()) {
      for (SphereKind k : {SphereKind::roundtrip, SphereKind::right, SphereKind::left}) {
        std::size_t total = 0;
        for (int n = 0; n <= 2 * static_cast<int>(q.vertex_count()); ++n) total += sphere(q, x, n, k).members.size();
        EXPECT_EQ(total, q.vertex_count());
      }
    }
  }
}

TEST(Spheres, LinearFamilyHasTwoPointSpheres) {
  auto lin = family("a-inf-inf-linear");
  Window w = Window::radius(16);
  for (int n = 1; n <= 12; ++n) {
    auto s = roundtrip_sphere(lin, 0, n, w);
    EXPECT_EQ(s.members, (std::vector<VertexId>{-n, n}));
    EXPECT_TRUE(s.complete);
  }
  EXPECT_FALSE(roundtrip_sphere(lin, 0, 17, w).complete);
}

TEST(Spheres, TruncatedOnTheFanFamily) {
  auto f1 = family("figure1-right");
  for (int r : {4, 8, 16}) {
    auto s = roundtrip_sphere(f1, 0, 1, Window::radius(r));
    EXPECT_FALSE(s.complete);
    EXPECT_GE(static_cast<int>(s.members.size()), r - 1);
    for (int k = 1; k <= r; ++k) EXPECT_TRUE(std::binary_search(s.members.begin(), s.members.end(), VertexId(k)));
  }
}

TEST(Cones, A2) {
  auto cone = right_lightcone_zq(kA2, zv(0, "x"), Window::slices(-2, 2));
  EXPECT_EQ(cone.members, (std::vector<ZVertex>{zv(0, "x"), zv(0, "y")}));
  auto left = left_lightcone_zq(kA2, zv(0, "y"), Window::slices(-2, 2));
  EXPECT_EQ(left.members, (std::vector<ZVertex>{zv(0, "x"), zv(0, "y")}));
  Quiver two = make_quiver({"x", "y", "z"}, {{"x", "y"}});
  auto part = right_lightcone_zq(two, zv(0, "x"), Window::slices(-3, 3));
  for (const auto& v : part.members) EXPECT_NE(v.base, VertexId("z"));
}

// Cone members are exactly the slab vertices y with a path from the center
// to y but none to tau y; one per orbit.
TEST(Cones, MatchReachabilityAndMeetOrbitsOnce) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    Quiver q = testing::random_quiver(rng, {.max_vertices = 6, .max_arrows = 10});
    const auto n = static_cast<std::int64_t>(q.vertex_count());
    Window w = Window::slices(-n - 1, n + 1);
    for (const auto& x : q.vertices()) {
      ZVertex c{0, x};
      auto cone = right_lightcone_zq(q, c, w);
      std::set<VertexId> orbits;
      for (const auto& v : cone.members) {
        EXPECT_TRUE(orbits.insert(v.base).second);
        EXPECT_EQ(testing::slab_lightcone_distance(q, c, v), 0);
      }
      EXPECT_EQ(orbits.size(), q.vertex_count());
      auto left = left_lightcone_zq(q, c, w);
      EXPECT_EQ(left.members.size(), q.vertex_count());
      for (const auto& v : left.members) EXPECT_EQ(testing::slab_lightcone_distance(q, v, c), 0);
    }
  }
}

}  // namespace
}  // namespace quiverlc
