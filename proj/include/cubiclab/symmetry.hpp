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

#include <optional>
#include <string>
#include <vector>

#include "cubiclab/graph.hpp"

namespace cubiclab {

inline constexpr int kCanonicalMaxOrder = 24;
inline constexpr int kAutomorphismMaxOrder = 16;

struct CanonicalForm {
  std::string graph6;            // graph6 of the canonically relabeled graph
  std::vector<Vertex> labeling;  // labeling[v] = canonical id of v

  bool operator==(const CanonicalForm& other) const { return graph6 == other.graph6; }
};

// Exact canonical form. Equal strings <=> isomorphic graphs.
CanonicalForm canonical_form(const Graph& g);

// The graph relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

// perm[v] = image of v.
using Permutation = std::vector<Vertex>;

// Every automorphism, lexicographically sorted (identity first). n <= 16.
std::vector<Permutation> automorphism_group(const Graph& g);

enum class OrbitMode { kFullGroup, kRootStabilizer };

const char* to_string(OrbitMode mode);
OrbitMode parse_orbit_mode(std::string_view text);

struct EdgeOrbitPartition {
  std::vector<std::vector<Edge>> orbits;  // each sorted; ordered by least edge
  OrbitMode mode = OrbitMode::kFullGroup;
  std::optional<Vertex> root;             // set in root-stabilizer mode
};

// `root` is required (and only used) in root-stabilizer mode.
EdgeOrbitPartition edge_orbits(const Graph& g, OrbitMode mode,
                               std::optional<Vertex> root = std::nullopt);

struct DistinctCycleEdges {
  int count = 0;
  std::vector<Edge> representatives;  // least edge of each cycle-edge orbit
  EdgeOrbitPartition partition;
};

// Orbits containing at least one edge that lies on a cycle (non-bridge).
DistinctCycleEdges distinct_cycle_edges(const Graph& g, OrbitMode mode,
                                        std::optional<Vertex> root = std::nullopt);

}  // namespace cubiclab
