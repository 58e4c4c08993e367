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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubiclab {

using Vertex = int;

// Undirected edge in canonical orientation (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool touches(Vertex x) const { return u == x || v == x; }
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on dense ids [0, n). Immutable once built; every
// adjacency list is sorted ascending.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

  // All edges, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);
  friend class GraphEditor;

  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

// Throws PreconditionError on an out-of-range id or a self-loop. Repeated
// pairs are merged.
Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

// Mutable scratch copy used by the constructive operations. Removed vertices
// are compacted away by finish(), which reports the old->new remap.
class GraphEditor {
 public:
  GraphEditor() = default;
  explicit GraphEditor(const Graph& g);

  Vertex add_vertex();
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);

  bool alive(Vertex v) const { return alive_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int capacity() const { return static_cast<int>(adj_.size()); }

  struct Result {
    Graph graph;
    std::vector<Vertex> remap;  // remap[old] = new id, or -1 if removed
  };
  Result finish() const;

 private:
  void check_live(Vertex v, const char* what) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> alive_;
};

// graph6 codec (one graph, no header, no line terminator in the output).
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

// Plain edge-list text: "n m" then m lines "u v".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Reads a corpus: graph6 one per line, or concatenated edge-list blocks when
// the first non-empty line contains whitespace.
std::vector<Graph> parse_corpus(std::string_view text);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_new;  // size g.order(); -1 outside the subset
  std::vector<Vertex> to_old;  // size |subset|, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

inline constexpr int kUnreachable = -1;

struct DistanceProfile {
  Vertex root = 0;
  std::vector<int> dist;  // kUnreachable outside the searched region
  int d_max = 0;
};

DistanceProfile bfs_distances(const Graph& g, Vertex root);

// BFS confined to `region` (root must be inside it).
DistanceProfile bfs_distances(const Graph& g, Vertex root,
                              std::span<const Vertex> region);

struct BasicFacts {
  bool is_cubic = false;
  bool is_connected = false;
  std::vector<int> degree_sequence;  // descending
};

BasicFacts basic_predicates(const Graph& g);
bool is_connected(const Graph& g);
bool is_cubic(const Graph& g);

// Connected components as sorted vertex lists, ordered by least member.
std::vector<std::vector<Vertex>> components(const Graph& g);

}  // namespace cubiclab
