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

#pragma once

#include <utility>
#include <vector>

#include "cubiclab/connectivity.hpp"
#include "cubiclab/graph.hpp"
#include "cubiclab/symmetry.hpp"

namespace cubiclab {

enum class SideLabel { kA, kB };

// The side of `bb` whose induced subgraph has more distinct cycle edges
// (full automorphism group of that subgraph). Ties: smaller canonical
// graph6, then the side holding vertex 0.
SideLabel select_g1_side(const Graph& g, const BiBridge& bb);

// Result of splicing a bridge into a biconnected cubic graph G on n vertices.
//
// With cut edges (a1,b1), (a2,b2), where the b-ends lie on the selected side:
// both cut edges are deleted, w joins a1 and a2, x joins w, y joins b1 and x,
// z joins b2 and x. w..z take ids n..n+3. The bridge is w-x; y and z are left
// with degree 2.
struct ConstructionRecord {
  Graph source;
  BiBridge chosen_bibridge;
  SideLabel selected_side = SideLabel::kA;
  Graph g_prime;
  Edge bridge;
  Vertex w = 0;  // bridge end off the selected side
  Vertex x = 0;  // bridge end on the selected side (= v0)
  std::pair<Vertex, Vertex> deg2_nodes;   // (y, z)
  std::pair<Vertex, Vertex> attachments;  // (b1, b2)
  std::vector<Vertex> g1_side;            // selected side plus x, y, z; sorted
  Vertex v0 = 0;
  DistanceProfile profile;                // from v0 within g1_side
};

ConstructionRecord bridge_construct(const Graph& g);

// The side subgraph with its v0, in its own compact ids.
struct SideView {
  InducedSubgraph sub;
  Vertex root = 0;
};
SideView side_view(const ConstructionRecord& rec);

struct DistanceBoundReport {
  int d_max = 0;
  int distinct_full_group = 0;     // edge orbits of the side, full group
  int distinct_stabilizer = 0;     // edge orbits fixing v0
  bool holds_full_group = false;   // distinct_full_group >= d_max
  bool holds_stabilizer = false;
  std::vector<int> facilitated;    // distances d with an edge joining d-1 and d
  bool every_distance_facilitated = false;
};

// At least d_max distinct edges on the selected side, plus the mechanism:
// every distance 1..d_max is reached through some edge from one layer down.
DistanceBoundReport check_distance_bound(const ConstructionRecord& rec);

// True iff the selected side has no bridge (every edge lies on a cycle).
bool check_side_bridgeless(const ConstructionRecord& rec);

// Deletes e = (u, v) from g_prime and joins u, v to y, z. u goes to y unless
// that duplicates an edge or leaves a bridge other than w-x, in which case
// the pairing is swapped. e must lie inside the selected side, on a cycle,
// and avoid y and z.
Graph cycle_insertion(const ConstructionRecord& rec, Edge e);

struct FamilyMember {
  Edge edge;
  Graph graph;
  std::string canonical;
};

struct InsertionFamily {
  ConstructionRecord record;
  OrbitMode mode = OrbitMode::kFullGroup;
  int cycle_edge_orbits = 0;
  std::vector<FamilyMember> members;
  // Cycle-edge orbits every member of which touches y or z; no insertion exists.
  std::vector<std::vector<Edge>> ineligible_orbits;
  bool pairwise_noniso = true;
  std::vector<std::pair<int, int>> collisions;  // member index pairs
};

InsertionFamily insertion_family(const ConstructionRecord& rec,
                                 OrbitMode mode = OrbitMode::kFullGroup);

}  // namespace cubiclab
