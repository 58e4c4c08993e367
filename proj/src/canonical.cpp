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
#include <cstdint>
#include <numeric>

#include "cubiclab/error.hpp"
#include "cubiclab/symmetry.hpp"

// Canonical labeling by individualization-refinement.
//
// A coloring maps each vertex to the start position of its cell in the ordered
// partition. Refinement splits cells by (own color, multiset of neighbor
// colors) until stable; individualizing v in cell c gives v color c and the
// rest of the cell color c + 1. Every leaf (discrete coloring) is a labeling;
// the canonical one is the leaf whose relabeled adjacency rows are
// lexicographically greatest. Leaves that tie with the best yield
// automorphisms, which prune sibling branches in the same orbit of the
// pointwise stabilizer of the current individualization path.

namespace cubiclab {
namespace {

using Rows = std::vector<std::uint32_t>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    std::vector<int> color = initial_coloring();
    std::vector<Vertex> path;
    search(std::move(color), path);
    CanonicalForm out;
    out.labeling = best_label_;
    std::vector<Edge> edges;
    for (const Edge& e : g_.edges()) edges.push_back(Edge::of(best_label_[e.u], best_label_[e.v]));
    out.graph6 = to_graph6(build_graph(n_, std::span<const Edge>(edges)));
    return out;
  }

 private:
  // Vertex invariant seed: triangles through each vertex.
  std::vector<int> initial_coloring() const {
    std::vector<int> tri(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      auto nb = g_.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (g_.adjacent(nb[i], nb[j])) ++tri[v];
        }
      }
    }
    std::vector<int> color(n_, 0);
    return recolor_by_key(color, [&](Vertex v) { return std::vector<int>{g_.degree(v), tri[v]}; });
  }

  template <typename KeyFn>
  std::vector<int> recolor_by_key(const std::vector<int>& color, KeyFn key_of) const {
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    keyed.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<int> key{color[v]};
      auto extra = key_of(v);
      key.insert(key.end(), extra.begin(), extra.end());
      keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
      const bool same = i > 0 && keyed[i].first == keyed[i - 1].first;
      out[keyed[i].second] = same ? out[keyed[i - 1].second] : i;
    }
    return out;
  }

  static int cell_count(const std::vector<int>& color) {
    std::vector<int> c(color);
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<int>& color) const {
    int cells = cell_count(color);
    while (true) {
      auto next = recolor_by_key(color, [&](Vertex v) {
        std::vector<int> nc;
        for (Vertex w : g_.neighbors(v)) nc.push_back(color[w]);
        std::sort(nc.begin(), nc.end());
        return nc;
      });
      const int next_cells = cell_count(next);
      color = std::move(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
  }

  void leaf(const std::vector<int>& label) {
    Rows rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g_.neighbors(v)) rows[label[v]] |= std::uint32_t{1} << label[w];
    }
    if (best_label_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_label_ = label;
      return;
    }
    if (rows == best_rows_) {
      std::vector<Vertex> inv_best(n_);
      for (Vertex v = 0; v < n_; ++v) inv_best[best_label_[v]] = v;
      Permutation gamma(n_);
      for (Vertex v = 0; v < n_; ++v) gamma[v] = inv_best[label[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  Vertex find(std::vector<Vertex>& parent, Vertex x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool in_explored_orbit(Vertex v, const std::vector<Vertex>& explored,
                         const std::vector<Vertex>& path) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes_path = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes_path) continue;
      for (Vertex x = 0; x < n_; ++x) {
        Vertex a = find(parent, x), b = find(parent, gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    const Vertex rv = find(parent, v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return find(parent, e) == rv; });
  }

  void search(std::vector<int> color, std::vector<Vertex>& path) {
    refine(color);
    std::vector<int> size(n_, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] == target) members.push_back(v);
    }
    std::vector<Vertex> explored;
    for (Vertex v : members) {
      if (in_explored_orbit(v, explored, path)) continue;
      std::vector<int> child(color);
      for (Vertex u : members) child[u] = (u == v) ? target : target + 1;
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  const int n_;
  Rows best_rows_;
  std::vector<int> best_label_;
  std::vector<Permutation> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw PreconditionError("canonical_form: order " + std::to_string(g.order()) +
                            " exceeds bound " + std::to_string(kCanonicalMaxOrder));
  }
  if (g.order() == 0) return CanonicalForm{to_graph6(g), {}};
  return CanonSearch(g).run();
}

Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g).graph6); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) {
    // Still enforce the size bound for a consistent contract.
    if (g.order() > kCanonicalMaxOrder || h.order() > kCanonicalMaxOrder) {
      throw PreconditionError("are_isomorphic: order exceeds bound");
    }
    return false;
  }
  return canonical_form(g).graph6 == canonical_form(h).graph6;
}

}  // namespace cubiclab
