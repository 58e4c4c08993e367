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

#include <vector>

#include "cubiclab/graph.hpp"

namespace cubiclab {

// A 2-edge-cut of a bridgeless graph together with the two sides it leaves.
// side_a is the side holding e1.u.
struct BiBridge {
  Edge e1;
  Edge e2;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  int balance = 0;  // | |side_a| - |side_b| |

  bool operator==(const BiBridge&) const = default;
};

struct ConnectivityClass {
  int bridge_count = 0;
  bool is_bridge_graph = false;
  bool is_biconnected_paper = false;  // bridgeless with at least one 2-edge-cut
  bool is_three_connected = false;
};

// Bridges of a connected graph via one low-link DFS. Throws on disconnected
// input.
std::vector<Edge> find_bridges(const Graph& g);

// Same, but accepts any graph (bridges of every component).
std::vector<Edge> find_bridges_any(const Graph& g);

// All 2-edge-cuts, lexicographic on (e1, e2). Requires a connected, bridgeless
// graph.
std::vector<BiBridge> two_edge_cuts(const Graph& g);

ConnectivityClass classify_connectivity(const Graph& g);

// Most balanced 2-edge-cut; ties resolved by the lexicographically least
// edge pair. Throws when the graph has none.
BiBridge most_balanced_bibridge(const Graph& g);

}  // namespace cubiclab
