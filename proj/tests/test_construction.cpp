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

#include "cubiclab/census.hpp"
#include "cubiclab/connectivity.hpp"
#include "cubiclab/construction.hpp"
#include "cubiclab/error.hpp"
#include "oracles.hpp"

using namespace cubiclab;

namespace {

std::vector<Graph> biconnected(int n) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_cubic(n)) {
    if (classify_connectivity(g).is_biconnected_paper) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("bridge_construct on D8") {
  const auto rec = bridge_construct(oracle::d8());
  CHECK(rec.chosen_bibridge.e1 == Edge{0, 4});
  CHECK(rec.selected_side == SideLabel::kA);
  CHECK(rec.g_prime.order() == 12);
  CHECK(rec.w == 8);
  CHECK(rec.x == 9);
  CHECK(rec.v0 == 9);
  CHECK(rec.bridge == Edge{8, 9});
  CHECK(rec.deg2_nodes == std::pair<Vertex, Vertex>{10, 11});
  CHECK(rec.attachments == std::pair<Vertex, Vertex>{0, 3});
  CHECK(rec.g1_side == std::vector<Vertex>{0, 1, 2, 3, 9, 10, 11});
  CHECK(oracle::bridges(rec.g_prime) == std::vector<Edge>{{8, 9}});
  for (Vertex v = 0; v < 12; ++v) CHECK(rec.g_prime.degree(v) == (v == 10 || v == 11 ? 2 : 3));

  // dist(x)=0, y and z at 1, the attachment points at 2, the rest at 3.
  CHECK(rec.profile.dist[9] == 0);
  CHECK(rec.profile.dist[10] == 1);
  CHECK(rec.profile.dist[11] == 1);
  CHECK(rec.profile.dist[0] == 2);
  CHECK(rec.profile.dist[3] == 2);
  CHECK(rec.profile.dist[1] == 3);
  CHECK(rec.profile.dist[2] == 3);
  CHECK(rec.profile.d_max == 3);
  CHECK(rec.profile.dist[4] == kUnreachable);
}

TEST_CASE("bridge_construct rejects non-biconnected inputs") {
  CHECK_THROWS_AS(bridge_construct(oracle::k4()), PreconditionError);
  CHECK_THROWS_AS(bridge_construct(oracle::petersen()), PreconditionError);
  CHECK_THROWS_AS(bridge_construct(oracle::dumbbell10()), PreconditionError);
  CHECK_THROWS_AS(bridge_construct(oracle::path(4)), PreconditionError);
}

TEST_CASE("select_g1_side") {
  const Graph d8 = oracle::d8();
  const auto bb = most_balanced_bibridge(d8);
  CHECK(select_g1_side(d8, bb) == SideLabel::kA);
  // Relabel so vertex 0 sits on the other diamond: the choice follows it.
  const Graph moved = oracle::relabel(d8, {4, 5, 6, 7, 0, 1, 2, 3});
  const auto bb2 = most_balanced_bibridge(moved);
  const auto side = select_g1_side(moved, bb2);
  const auto& chosen = side == SideLabel::kA ? bb2.side_a : bb2.side_b;
  CHECK(std::binary_search(chosen.begin(), chosen.end(), 0));

  // Unequal sides: the larger brute-force distinct-cycle-edge count wins.
  int unequal = 0;
  for (int n : {10, 12}) {
    for (const Graph& g : biconnected(n)) {
      const auto cut = most_balanced_bibridge(g);
      const int ca = oracle::distinct_cycle_edges(induced_subgraph(g, cut.side_a).graph);
      const int cb = oracle::distinct_cycle_edges(induced_subgraph(g, cut.side_b).graph);
      if (ca == cb) continue;
      ++unequal;
      CHECK(select_g1_side(g, cut) == (ca > cb ? SideLabel::kA : SideLabel::kB));
    }
  }
  CHECK(unequal > 0);
}

TEST_CASE("check_distance_bound on D8") {
  const auto rec = bridge_construct(oracle::d8());
  const auto r = check_distance_bound(rec);
  CHECK(r.d_max == 3);
  CHECK(r.facilitated == std::vector<int>{1, 2, 3});
  CHECK(r.every_distance_facilitated);
  CHECK(r.distinct_full_group == 4);
  CHECK(r.holds_full_group);
  CHECK(r.holds_stabilizer);
}

TEST_CASE("check_side_bridgeless") {
  const auto rec = bridge_construct(oracle::d8());
  CHECK(check_side_bridgeless(rec));
  auto broken = rec;
  GraphEditor ed(rec.g_prime);
  ed.remove_edge(rec.deg2_nodes.first, rec.x);
  broken.g_prime = ed.finish().graph;
  CHECK_FALSE(check_side_bridgeless(broken));
}

TEST_CASE("cycle_insertion on D8") {
  const auto rec = bridge_construct(oracle::d8());
  const Graph out = cycle_insertion(rec, Edge{1, 2});
  CHECK(out.order() == 12);
  CHECK(is_cubic(out));
  CHECK(is_connected(out));
  CHECK(oracle::bridges(out) == std::vector<Edge>{{8, 9}});
  CHECK(out.adjacent(1, 10));
  CHECK(out.adjacent(2, 11));

  CHECK_THROWS_AS(cycle_insertion(rec, Edge{8, 9}), PreconditionError);    // the bridge
  CHECK_THROWS_AS(cycle_insertion(rec, Edge{0, 10}), PreconditionError);   // touches y
  CHECK_THROWS_AS(cycle_insertion(rec, Edge{5, 6}), PreconditionError);    // other side
  CHECK_THROWS_AS(cycle_insertion(rec, Edge{1, 5}), PreconditionError);    // not an edge
}

TEST_CASE("cycle_insertion swaps the pairing when id order would add a bridge") {
  // Two blocks on the selected side joined by the edge (4,5); sending 4 to y
  // would cut y's block off behind x-y.
  const auto rec = bridge_construct(parse_graph6("K`?LDDGQGgA`"));
  REQUIRE(rec.deg2_nodes == std::pair<Vertex, Vertex>{14, 15});
  const Graph out = cycle_insertion(rec, Edge{4, 5});
  CHECK(out.adjacent(5, 14));
  CHECK(out.adjacent(4, 15));
  CHECK(oracle::bridges(out) == std::vector<Edge>{rec.bridge});
}

TEST_CASE("insertion_family on D8") {
  const auto fam = insertion_family(bridge_construct(oracle::d8()));
  CHECK(fam.cycle_edge_orbits == 4);
  REQUIRE(fam.members.size() == 2);
  CHECK(fam.members[0].edge == Edge{0, 1});
  CHECK(fam.members[1].edge == Edge{1, 2});
  // {x-y, x-z} and {y-0, z-3} only contain edges at y or z.
  CHECK(fam.ineligible_orbits.size() == 2);
  CHECK(fam.pairwise_noniso);
  CHECK(fam.collisions.empty());
  CHECK_FALSE(oracle::isomorphic(fam.members[0].graph, fam.members[1].graph));
}

TEST_CASE("property: construction sweep n <= 12") {
  for (int n = 6; n <= 12; n += 2) {
    for (const Graph& g : biconnected(n)) {
      const auto rec = bridge_construct(g);
      REQUIRE(rec.g_prime.order() == n + 4);
      CHECK(oracle::bridges(rec.g_prime) == std::vector<Edge>{rec.bridge});
      int deg2 = 0;
      for (Vertex v = 0; v < rec.g_prime.order(); ++v) deg2 += rec.g_prime.degree(v) == 2;
      CHECK(deg2 == 2);
      CHECK(rec.bridge.touches(rec.v0));
      CHECK(std::binary_search(rec.g1_side.begin(), rec.g1_side.end(), rec.v0));
      CHECK(check_side_bridgeless(rec));

      const auto bound = check_distance_bound(rec);
      const auto side = induced_subgraph(rec.g_prime, rec.g1_side);
      CHECK(bound.distinct_full_group == oracle::distinct_cycle_edges(side.graph));
      CHECK(bound.distinct_stabilizer == oracle::distinct_cycle_edges(side.graph, side.to_new[rec.v0]));
      CHECK(bound.holds_stabilizer);
      CHECK(bound.every_distance_facilitated);

      for (OrbitMode mode : {OrbitMode::kFullGroup, OrbitMode::kRootStabilizer}) {
        const auto fam = insertion_family(rec, mode);
        for (const auto& m : fam.members) {
          CHECK(m.graph.order() == n + 4);
          CHECK(is_cubic(m.graph));
          CHECK(is_connected(m.graph));
          CHECK(oracle::bridges(m.graph) == std::vector<Edge>{rec.bridge});
        }
        // Distances 1 and 2 are only facilitated by edges at y or z, so only
        // d_max - 2 is guaranteed.
        CHECK(static_cast<int>(fam.members.size()) >= rec.profile.d_max - 2);
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
          for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
            const bool iso = oracle::isomorphic(fam.members[i].graph, fam.members[j].graph);
            const bool reported = std::find(fam.collisions.begin(), fam.collisions.end(),
                                            std::pair<int, int>(i, j)) != fam.collisions.end();
            CHECK(iso == reported);
          }
        }
      }
    }
  }
}
