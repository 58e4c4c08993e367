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

#include <algorithm>
#include <map>
#include <numeric>

#include "cubiclab/connectivity.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/symmetry.hpp"

namespace cubiclab {
namespace {

// Per-vertex invariant: degree, triangle count, and the number of vertices
// at each BFS distance. Automorphisms preserve it, so it prunes candidates.
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> sig(n);
  for (Vertex v = 0; v < n; ++v) {
    int tri = 0;
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) tri += g.adjacent(nb[i], nb[j]) ? 1 : 0;
    }
    auto prof = bfs_distances(g, v);
    std::vector<int> layer(n + 1, 0);
    for (int d : prof.dist) layer[d == kUnreachable ? n : d]++;
    sig[v] = {g.degree(v), tri};
    sig[v].insert(sig[v].end(), layer.begin(), layer.end());
  }
  return sig;
}

class AutomorphismLister {
 public:
  explicit AutomorphismLister(const Graph& g)
      : g_(g), n_(g.order()), sig_(vertex_signatures(g)), image_(n_, -1), used_(n_, false) {
    // Order vertices component by component in BFS order so that every
    // vertex after a component's first has an already-placed neighbor.
    std::vector<bool> seen(n_, false);
    for (Vertex s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      const std::size_t start = order_.size();
      order_.push_back(s);
      anchor_.push_back(-1);
      for (std::size_t i = start; i < order_.size(); ++i) {
        for (Vertex w : g_.neighbors(order_[i])) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
            anchor_.push_back(order_[i]);
          }
        }
      }
    }
  }

  std::vector<Permutation> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool consistent(std::size_t depth, Vertex v, Vertex img) const {
    if (used_[img] || sig_[v] != sig_[img]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (g_.adjacent(u, v) != g_.adjacent(image_[u], img)) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      found_.push_back(image_);
      return;
    }
    const Vertex v = order_[depth];
    auto try_image = [&](Vertex img) {
      if (!consistent(depth, v, img)) return;
      image_[v] = img;
      used_[img] = true;
      extend(depth + 1);
      used_[img] = false;
      image_[v] = -1;
    };
    if (anchor_[depth] >= 0) {
      for (Vertex img : g_.neighbors(image_[anchor_[depth]])) try_image(img);
    } else {
      for (Vertex img = 0; img < n_; ++img) try_image(img);
    }
  }

  const Graph& g_;
  const int n_;
  std::vector<std::vector<int>> sig_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> automorphism_group(const Graph& g) {
  if (g.order() > kAutomorphismMaxOrder) {
    throw PreconditionError("automorphism_group: order " + std::to_string(g.order()) +
                            " exceeds full-listing bound " +
                            std::to_string(kAutomorphismMaxOrder));
  }
  auto group = AutomorphismLister(g).run();
  CUBICLAB_CHECK(!group.empty(), "automorphism search lost the identity");
  return group;
}

const char* to_string(OrbitMode mode) {
  return mode == OrbitMode::kFullGroup ? "full" : "stabilizer";
}

OrbitMode parse_orbit_mode(std::string_view text) {
  if (text == "full") return OrbitMode::kFullGroup;
  if (text == "stabilizer") return OrbitMode::kRootStabilizer;
  throw PreconditionError("unknown orbit mode '" + std::string(text) +
                          "' (expected full|stabilizer)");
}

EdgeOrbitPartition edge_orbits(const Graph& g, OrbitMode mode, std::optional<Vertex> root) {
  if (mode == OrbitMode::kRootStabilizer) {
    CUBICLAB_REQUIRE(root.has_value(), "edge_orbits: root-stabilizer mode needs a root");
    if (!g.has_vertex(*root)) {
      throw PreconditionError("edge_orbits: root " + std::to_string(*root) + " out of range");
    }
  }
  const auto edges = g.edges();
  const auto group = automorphism_group(g);
  std::vector<int> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index_of = [&](Edge e) {
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };
  for (const auto& gamma : group) {
    if (mode == OrbitMode::kRootStabilizer && gamma[*root] != *root) continue;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int j = index_of(Edge::of(gamma[edges[i].u], gamma[edges[i].v]));
      const int a = find(static_cast<int>(i)), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  EdgeOrbitPartition out;
  out.mode = mode;
  if (mode == OrbitMode::kRootStabilizer) out.root = root;
  std::map<int, std::vector<Edge>> by_root;
  for (std::size_t i = 0; i < edges.size(); ++i) by_root[find(static_cast<int>(i))].push_back(edges[i]);
  for (auto& [_, orbit] : by_root) out.orbits.push_back(std::move(orbit));
  std::sort(out.orbits.begin(), out.orbits.end());
  return out;
}

DistinctCycleEdges distinct_cycle_edges(const Graph& g, OrbitMode mode, std::optional<Vertex> root) {
  DistinctCycleEdges out;
  out.partition = edge_orbits(g, mode, root);
  const auto bridges = find_bridges_any(g);
  for (const auto& orbit : out.partition.orbits) {
    const bool on_cycle = !std::binary_search(bridges.begin(), bridges.end(), orbit.front());
    if (on_cycle) out.representatives.push_back(orbit.front());
  }
  out.count = static_cast<int>(out.representatives.size());
  return out;
}

}  // namespace cubiclab
