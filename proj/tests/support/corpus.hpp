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

// Seeded random quivers for property tests.

#ifndef QUIVERLC_TESTS_CORPUS_HPP
#define QUIVERLC_TESTS_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "quiverlc/quiver.hpp"

namespace quiverlc::testing {

struct CorpusSpec {
  int min_vertices = 1;
  int max_vertices = 12;
  int max_arrows = 20;
  bool acyclic = false;
  bool connected = true;
  double loop_chance = 0.0;      // per extra arrow, cyclic quivers only
  double parallel_chance = 0.1;  // per extra arrow: reuse an existing pair
};

/// Vertex names alternate between strings and integers so both id kinds get
/// exercised.
inline VertexId corpus_vertex(int i) {
  if (i % 3 == 2) return VertexId(i);
  return VertexId("v" + std::to_string(i));
}

/// A random quiver. Connected quivers start from a random spanning tree.
/// Acyclic quivers orient every arrow along a hidden random order; the
/// others pick orientations freely.
inline Quiver random_quiver(std::mt19937_64& rng, const CorpusSpec& spec) {
  std::uniform_int_distribution<int> nv(spec.min_vertices, spec.max_vertices);
  const int n = nv(rng);
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);

  QuiverBuilder<VertexId> b;
  for (int i = 0; i < n; ++i) b.add_vertex(corpus_vertex(i));
  int arrows = 0;
  std::vector<std::pair<int, int>> used;
  std::bernoulli_distribution coin(0.5);
  auto orient = [&](int u, int v) {
    if (spec.acyclic) return rank[u] < rank[v] ? std::pair{u, v} : std::pair{v, u};
    return coin(rng) ? std::pair{u, v} : std::pair{v, u};
  };
  auto add = [&](int u, int v) {
    b.add_arrow(corpus_vertex(u), corpus_vertex(v));
    used.push_back({u, v});
    ++arrows;
  };

  if (spec.connected) {
    for (int i = 1; i < n && arrows < spec.max_arrows; ++i) {
      std::uniform_int_distribution<int> parent(0, i - 1);
      auto [u, v] = orient(i, parent(rng));
      add(u, v);
    }
  }
  if (n >= 1 && arrows < spec.max_arrows) {
    std::uniform_int_distribution<int> extra(0, spec.max_arrows - arrows);
    int k = extra(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int t = 0; t < k; ++t) {
      if (!used.empty() && u01(rng) < spec.parallel_chance) {
        std::uniform_int_distribution<std::size_t> which(0, used.size() - 1);
        auto [u, v] = used[which(rng)];
        add(u, v);
        continue;
      }
      int u = pick(rng);
      int v = pick(rng);
      if (u == v) {
        if (!spec.acyclic && u01(rng) < spec.loop_chance) add(u, u);
        continue;
      }
      auto [s, d] = orient(u, v);
      add(s, d);
    }
  }
  return b.build();
}

}  // namespace quiverlc::testing

#endif  // QUIVERLC_TESTS_CORPUS_HPP
