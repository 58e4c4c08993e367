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
#include "cubiclab/symmetry.hpp"

namespace cubiclab {

inline constexpr int kDefaultEnumerationMaxN = 18;

// Enumeration bound: CUBIC_LAB_MAX_N when set, else 18.
int enumeration_max_n();

// Every connected cubic graph on n vertices once up to isomorphism, each in
// canonical labeling, ordered by canonical graph6. Results are memoized per
// process.
std::vector<Graph> enumerate_cubic(int n);

struct CensusRow {
  int n = 0;
  long long total_cubic = 0;
  long long hamiltonian = 0;
  long long non_hamiltonian = 0;
  long long bridge = 0;
  long long biconnected_paper = 0;
  long long three_connected = 0;
  long long non_ham_and_bridge = 0;
  long long non_ham_non3conn = 0;
  std::optional<double> bridge_fraction_of_non_ham;  // empty when nothing is non-Hamiltonian

  bool operator==(const CensusRow&) const = default;
};

struct CensusOptions {
  int jobs = 1;
  // Re-run full backtracking (no bridge shortcut) on every bridge graph and
  // fail hard if any turns out Hamiltonian.
  bool verify_bridge_shortcut = false;
};

std::vector<CensusRow> census_table(int n_min, int n_max, CensusOptions options = {});

std::string census_csv(const std::vector<CensusRow>& rows);
std::string census_json(const std::vector<CensusRow>& rows);

// n^5 < k <= 32 n^5, i.e. size in [k^(1/5)/2, k^(1/5)).
bool tree_size_in_range(long long size, long long k);

// Region induces a tree rooted at `root` where every internal vertex has
// exactly two children and all leaves share one depth. {root} alone counts.
bool is_complete_tree_region(const Graph& g, std::span<const Vertex> region, Vertex root);

struct TreeSideReport {
  Edge bridge;
  Vertex root = 0;
  int side_size = 0;
  int k = 0;
  std::optional<int> k_whole;
  int target_size = 0;
  std::vector<Vertex> region;
  bool complete_tree = false;
  bool size_in_range = false;
  bool matches = false;
};

struct CompleteTreeMatch {
  bool matches = false;
  int tree_size = 0;  // of the first matching side, else of the first side
  int k = 0;
  std::optional<int> k_whole;
  std::vector<TreeSideReport> sides;
};

CompleteTreeMatch is_complete_tree_at_bridge(const Graph& h, OrbitMode mode = OrbitMode::kFullGroup);

struct ConjectureProbeRow {
  int n = 0;
  long long lhs_count = 0;  // size n+2 bridge graphs with a qualifying tree
  long long rhs_count = 0;  // size n bridge graphs
  bool injection_possible = true;

  bool operator==(const ConjectureProbeRow&) const = default;
};

ConjectureProbeRow conjecture_probe(int n, int jobs = 1);

std::string probe_csv(const std::vector<ConjectureProbeRow>& rows);
std::string probe_json(const std::vector<ConjectureProbeRow>& rows);

struct FamilyStatsRow {
  std::string source_graph6;
  int k = 0;                   // distinct cycle edges of the selected side
  int d_max = 0;
  int family_size = 0;
  int ineligible_orbits = 0;
  int within_collisions = 0;
};

struct CrossCollision {
  std::string canonical;
  std::vector<int> sources;  // row indices that produced the same graph
};

struct FamilyStats {
  int n = 0;
  OrbitMode mode = OrbitMode::kFullGroup;
  std::vector<FamilyStatsRow> rows;
  std::vector<CrossCollision> cross_collisions;
};

FamilyStats family_size_stats(int n, OrbitMode mode = OrbitMode::kFullGroup, int jobs = 1);
std::string family_stats_json(const FamilyStats& stats);

}  // namespace cubiclab
