// Copyright 2026 The Cubic Lab Authors
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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cubiclab/census.hpp"
#include "cubiclab/connectivity.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/symmetry.hpp"
#include "oracles.hpp"

using namespace cubiclab;

namespace {

std::vector<Graph> labeled_classes(int n) {
  std::vector<Graph> out;
  for (const Graph& g : oracle::labeled_cubic_graphs(n)) {
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

Graph compose_apply(const Graph& g, const Permutation& p) { return oracle::relabel(g, p); }

}  // namespace

TEST_CASE("canonical_form examples") {
  oracle::Rng rng(3);
  const Graph k4 = oracle::k4();
  CHECK(canonical_form(k4).graph6 == canonical_form(oracle::relabel(k4, rng.permutation(4))).graph6);
  CHECK(canonical_form(oracle::k33()).graph6 != canonical_form(oracle::prism()).graph6);
  const Graph empty = build_graph(0, std::initializer_list<std::pair<Vertex, Vertex>>{});
  CHECK(canonical_form(empty).graph6 == "?");
  CHECK_THROWS_AS(canonical_form(oracle::random_graph(rng, kCanonicalMaxOrder + 1, 0.2)),
                  PreconditionError);
}

TEST_CASE("canonical labeling maps the graph onto its canonical graph") {
  oracle::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + rng.below(14), 0.3);
    const auto cf = canonical_form(g);
    CHECK(to_graph6(oracle::relabel(g, cf.labeling)) == cf.graph6);
    CHECK(to_graph6(canonical_graph(g)) == cf.graph6);
  }
}

TEST_CASE("property: canonical form invariant under relabeling") {
  oracle::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + rng.below(kCanonicalMaxOrder);
    const Graph g = oracle::random_graph(rng, n, rng.below(2) ? 0.15 : 0.5);
    REQUIRE(canonical_form(g).graph6 == canonical_form(oracle::relabel(g, rng.permutation(n))).graph6);
  }
  for (const Graph& g : enumerate_cubic(16)) {
    if (rng.below(20) != 0) continue;
    REQUIRE(canonical_form(g).graph6 == canonical_form(oracle::relabel(g, rng.permutation(16))).graph6);
  }
}

TEST_CASE("canonical equality matches the permutation oracle on cubic graphs n <= 8") {
  for (int n : {4, 6, 8}) {
    const auto graphs = labeled_classes(n);
    // Reduce the labeled set to a manageable sample per canonical class plus
    // cross-class pairs.
    std::map<std::string, std::vector<const Graph*>> by_form;
    for (const Graph& g : graphs) by_form[canonical_form(g).graph6].push_back(&g);
    std::vector<const Graph*> reps;
    for (auto& [form, members] : by_form) {
      reps.push_back(members.front());
      for (std::size_t i = 1; i < members.size() && i < 6; ++i) {
        CHECK(oracle::isomorphic(*members.front(), *members[i]));
      }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(oracle::isomorphic(*reps[i], *reps[j]));
    }
  }
}

TEST_CASE("are_isomorphic examples") {
  oracle::Rng rng(1);
  CHECK(are_isomorphic(oracle::k4(), oracle::relabel(oracle::k4(), rng.permutation(4))));
  CHECK_FALSE(are_isomorphic(oracle::k33(), oracle::prism()));
  const Graph swapped = oracle::relabel(oracle::d8(), {4, 5, 6, 7, 0, 1, 2, 3});
  CHECK(are_isomorphic(oracle::d8(), swapped));
  CHECK_FALSE(are_isomorphic(oracle::k4(), oracle::prism()));
}

TEST_CASE("automorphism_group examples") {
  CHECK(automorphism_group(oracle::k4()).size() == 24);
  CHECK(automorphism_group(oracle::diamond()).size() == 4);
  CHECK(oracle::automorphisms(oracle::diamond()).size() == 4);
  CHECK(automorphism_group(oracle::petersen()).size() == 120);
  oracle::Rng rng(2);
  CHECK_THROWS_AS(automorphism_group(oracle::random_graph(rng, kAutomorphismMaxOrder + 1, 0.2)),
                  PreconditionError);
}

TEST_CASE("property: automorphism group equals the brute-force group") {
  std::vector<Graph> corpus{oracle::k33(), oracle::prism(), oracle::d8(), oracle::dumbbell10(),
                            oracle::path(5), oracle::cycle(7)};
  for (const Graph& g : enumerate_cubic(8)) corpus.push_back(g);
  oracle::Rng rng(4);
  for (int i = 0; i < 40; ++i) corpus.push_back(oracle::random_graph(rng, 2 + rng.below(7), 0.4));
  for (const Graph& g : corpus) {
    auto mine = automorphism_group(g);
    auto ref = oracle::automorphisms(g);
    std::sort(mine.begin(), mine.end());
    std::sort(ref.begin(), ref.end());
    CHECK(mine == ref);
  }
}

TEST_CASE("property: group axioms on listed groups") {
  oracle::Rng rng(8);
  for (const Graph& g : enumerate_cubic(12)) {
    if (rng.below(4) != 0) continue;
    const auto group = automorphism_group(g);
    std::set<Permutation> members(group.begin(), group.end());
    Permutation id(g.order());
    std::iota(id.begin(), id.end(), 0);
    CHECK(members.contains(id));
    for (int t = 0; t < 10; ++t) {
      const auto& a = group[rng.below(static_cast<int>(group.size()))];
      const auto& b = group[rng.below(static_cast<int>(group.size()))];
      Permutation ab(g.order());
      for (int v = 0; v < g.order(); ++v) ab[v] = a[b[v]];
      CHECK(members.contains(ab));
      CHECK(compose_apply(g, ab) == g);
    }
  }
}

TEST_CASE("edge_orbits examples") {
  const auto k4 = edge_orbits(oracle::k4(), OrbitMode::kFullGroup);
  REQUIRE(k4.orbits.size() == 1);
  CHECK(k4.orbits[0].size() == 6);

  const auto dia = edge_orbits(oracle::diamond(), OrbitMode::kFullGroup);
  REQUIRE(dia.orbits.size() == 2);
  CHECK(dia.orbits[0].size() == 4);
  CHECK(dia.orbits[1] == std::vector<Edge>{{1, 2}});

  const auto p = edge_orbits(oracle::path(3), OrbitMode::kRootStabilizer, 0);
  CHECK(p.orbits.size() == 2);
  CHECK(p.root == 0);
  CHECK(edge_orbits(oracle::path(3), OrbitMode::kFullGroup).orbits.size() == 1);

  CHECK_THROWS_AS(edge_orbits(oracle::path(3), OrbitMode::kRootStabilizer, 3), PreconditionError);
  CHECK_THROWS_AS(edge_orbits(oracle::path(3), OrbitMode::kRootStabilizer), PreconditionError);
  CHECK(parse_orbit_mode("stabilizer") == OrbitMode::kRootStabilizer);
  CHECK(std::string(to_string(OrbitMode::kFullGroup)) == "full");
  CHECK_THROWS_AS(parse_orbit_mode("both"), PreconditionError);
}

TEST_CASE("property: orbits match the brute-force orbits; stabilizer refines full") {
  std::vector<Graph> corpus{oracle::d8(), oracle::dumbbell10(), oracle::petersen(), oracle::prism()};
  for (const Graph& g : enumerate_cubic(10)) corpus.push_back(g);
  for (const Graph& g : corpus) {
    const auto full = edge_orbits(g, OrbitMode::kFullGroup);
    CHECK(full.orbits == oracle::edge_orbits(g));
    for (Vertex root : {0, g.order() - 1}) {
      const auto stab = edge_orbits(g, OrbitMode::kRootStabilizer, root);
      CHECK(stab.orbits == oracle::edge_orbits(g, root));
      for (const auto& orbit : stab.orbits) {
        const bool inside = std::any_of(full.orbits.begin(), full.orbits.end(), [&](const auto& f) {
          return std::includes(f.begin(), f.end(), orbit.begin(), orbit.end());
        });
        CHECK(inside);
      }
    }
  }
}

TEST_CASE("distinct_cycle_edges examples") {
  CHECK(distinct_cycle_edges(oracle::k4(), OrbitMode::kFullGroup).count == 1);
  const auto dia = distinct_cycle_edges(oracle::diamond(), OrbitMode::kFullGroup);
  CHECK(dia.count == 2);
  CHECK(dia.representatives == std::vector<Edge>{{0, 1}, {1, 2}});
  const int dumbbell = distinct_cycle_edges(oracle::dumbbell10(), OrbitMode::kFullGroup).count;
  CHECK(dumbbell == oracle::distinct_cycle_edges(oracle::dumbbell10()));
  CHECK(dumbbell == 3);
  CHECK(distinct_cycle_edges(oracle::path(4), OrbitMode::kFullGroup).count == 0);
}
