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

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubiclab/construction.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/graph.hpp"
#include "cubiclab/symmetry.hpp"

namespace cubiclab {

// A cubic bridge graph after cycle insertion, with its bridge side.
struct ReducibleState {
  Graph a;
  Vertex v0 = 0;
  Vertex anchor = 0;             // bridge end off the side (w)
  std::vector<Vertex> side;      // sorted; contains v0
  int k = 0;                     // distinct cycle edges of the side subgraph
  std::optional<int> k_whole;    // same count over all of a (when listable)
  OrbitMode mode = OrbitMode::kFullGroup;
  DistanceProfile profile;       // from v0 within side
};

ReducibleState make_reducible_state(Graph a, Vertex v0, Vertex anchor, std::vector<Vertex> side,
                                    OrbitMode mode = OrbitMode::kFullGroup);

// State built from cycle_insertion(rec, e).
ReducibleState reducible_state_from(const ConstructionRecord& rec, Edge e,
                                    OrbitMode mode = OrbitMode::kFullGroup);

struct Triangle {
  std::array<Vertex, 3> v{};  // ascending
  auto operator<=>(const Triangle&) const = default;
};

// Two triangles sharing the edge center1-center2.
struct Diamond {
  Vertex tip1 = 0, tip2 = 0;        // tip1 < tip2
  Vertex center1 = 0, center2 = 0;  // center1 < center2
  auto operator<=>(const Diamond&) const = default;
};

struct IsolatedTriangleCase {
  Triangle triangle;
};
struct AdjacentTrianglesCase {
  Diamond diamond;
};
struct HorizontalEdgeCase {
  Edge edge;
};
struct CompleteTreeCase {};

using RegionCase =
    std::variant<IsolatedTriangleCase, AdjacentTrianglesCase, HorizontalEdgeCase, CompleteTreeCase>;

const char* case_name(const RegionCase& c);

struct APrimeRegion {
  int target_size = 0;               // floor(k^(1/5)) or the override
  std::vector<Vertex> selected;      // the closest target_size side vertices
  std::vector<Vertex> vertices;      // selected minus its farthest layer
  RegionCase shape = CompleteTreeCase{};
};

class RegionUnderflowError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Largest s with s^5 <= k.
int floor_fifth_root(long long k);

struct RegionOptions {
  // Replaces floor(k^(1/5)) as the number of side vertices selected.
  std::optional<int> size_override;
};

APrimeRegion extract_a_prime(const ReducibleState& st, RegionOptions options = {});

// Decision order: isolated triangle, adjacent triangles, horizontal edge,
// complete tree. Only triangles with all corners in the region count, but
// "isolated" is judged against every triangle of a.
RegionCase classify_region(const Graph& a, std::span<const Vertex> region,
                           const DistanceProfile& profile);

struct ReductionStep {
  Graph graph;
  std::vector<Vertex> remap;  // old id -> new id, -1 when removed
  std::vector<Vertex> added;  // ids in the new graph
};

// Replace a triangle by one vertex joined to its three external neighbors.
ReductionStep reduce_isolated_triangle(const Graph& a, const Triangle& t);

// Limits the closing cycle insertion of reduce_adjacent_triangles to a side
// and to edges whose use keeps every side distance from v0 from growing.
struct InsertionScope {
  Vertex v0 = 0;
  Vertex anchor = 0;
  std::vector<Vertex> side;
  DistanceProfile profile;
};

// Remove a diamond, join its two external neighbors to a new node p, hang a
// second new node q off p, then close q by cycle insertion on the least
// eligible cycle edge.
ReductionStep reduce_adjacent_triangles(const Graph& a, const Diamond& d,
                                        const InsertionScope* scope = nullptr);

// Delete both ends of e and reconnect each end's two other neighbors.
ReductionStep reduce_horizontal_edge(const Graph& a, Edge e);

struct CompleteTreeReport {
  std::string graph6;           // the graph A at the step the case was hit
  std::vector<Vertex> region;
  int tree_size = 0;
  int k = 0;
  std::optional<int> k_whole;
  int step = 0;                 // 0 for the first reduction, 1 for the second
};

struct StepSummary {
  std::string case_name;
  int order_before = 0;
  int order_after = 0;
  int region_size = 0;
  int k = 0;
};

struct ReduceOptions {
  OrbitMode mode = OrbitMode::kFullGroup;
  RegionOptions region;
};

struct ReduceOutcome {
  Edge inserted;
  std::optional<Graph> graph;                  // set on success
  std::optional<CompleteTreeReport> complete_tree;
  std::vector<StepSummary> steps;
};

// Cycle-insert e into the record, then shrink the result by two vertices twice.
ReduceOutcome reduce_to_n(const ConstructionRecord& rec, Edge e, ReduceOptions options = {});

// One validated reduction: size -2, connected, cubic, the side's bridge kept,
// side distances from v0 not increased.
ReducibleState apply_reduction(const ReducibleState& st, const RegionCase& shape);

}  // namespace cubiclab
