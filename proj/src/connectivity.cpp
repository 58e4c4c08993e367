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

#include "cubiclab/connectivity.hpp"

#include <algorithm>

#include "cubiclab/error.hpp"

namespace cubiclab {
namespace {

// Iterative Tarjan low-link. `skip` (if u >= 0) is treated as deleted.
std::vector<Edge> bridges_impl(const Graph& g, Edge skip = {-1, -1}) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (skip.u >= 0 && Edge::of(f.v, w) == skip) continue;
        // Simple graphs: the single parent edge is the only one to ignore.
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Vertex v = f.v;
        const Vertex p = f.parent;
        stack.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.push_back(Edge::of(p, v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Components of g with edges a and b removed, as a label per vertex.
std::vector<int> component_labels_without(const Graph& g, Edge a, Edge b, int& count) {
  std::vector<int> label(g.order(), -1);
  count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        const Edge e = Edge::of(v, w);
        if (e == a || e == b || label[w] >= 0) continue;
        label[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

std::vector<Edge> find_bridges_any(const Graph& g) { return bridges_impl(g); }

std::vector<Edge> find_bridges(const Graph& g) {
  CUBICLAB_REQUIRE(is_connected(g), "find_bridges: graph is disconnected");
  return bridges_impl(g);
}

std::vector<BiBridge> two_edge_cuts(const Graph& g) {
  CUBICLAB_REQUIRE(is_connected(g), "two_edge_cuts: graph is disconnected");
  const auto own = bridges_impl(g);
  if (!own.empty()) {
    throw PreconditionError("two_edge_cuts: graph has bridge " + to_string(own.front()) +
                            "; bi-bridges are defined on bridgeless graphs only");
  }
  std::vector<BiBridge> out;
  for (const Edge& e1 : g.edges()) {
    // In a bridgeless graph {e1, e2} is a cut iff e2 is a bridge of g - e1.
    for (const Edge& e2 : bridges_impl(g, e1)) {
      if (!(e1 < e2)) continue;
      int count = 0;
      auto label = component_labels_without(g, e1, e2, count);
      CUBICLAB_CHECK(count == 2, "2-edge-cut " + to_string(e1) + to_string(e2) +
                                     " left " + std::to_string(count) + " components");
      BiBridge bb{e1, e2, {}, {}, 0};
      const int a_label = label[e1.u];
      for (Vertex v = 0; v < g.order(); ++v) {
        (label[v] == a_label ? bb.side_a : bb.side_b).push_back(v);
      }
      CUBICLAB_CHECK(label[e1.v] != a_label && label[e2.u] != label[e2.v],
                     "cut edge does not cross the partition");
      bb.balance = std::abs(static_cast<int>(bb.side_a.size()) -
                            static_cast<int>(bb.side_b.size()));
      out.push_back(std::move(bb));
    }
  }
  std::sort(out.begin(), out.end(), [](const BiBridge& x, const BiBridge& y) {
    return std::tie(x.e1, x.e2) < std::tie(y.e1, y.e2);
  });
  return out;
}

ConnectivityClass classify_connectivity(const Graph& g) {
  CUBICLAB_REQUIRE(is_connected(g), "classify_connectivity: graph is disconnected");
  CUBICLAB_REQUIRE(is_cubic(g), "classify_connectivity: graph is not cubic");
  ConnectivityClass c;
  c.bridge_count = static_cast<int>(bridges_impl(g).size());
  c.is_bridge_graph = c.bridge_count > 0;
  if (!c.is_bridge_graph) {
    const bool has_cut = !two_edge_cuts(g).empty();
    c.is_biconnected_paper = has_cut;
    c.is_three_connected = !has_cut;
  }
  return c;
}

BiBridge most_balanced_bibridge(const Graph& g) {
  auto cuts = two_edge_cuts(g);
  if (cuts.empty()) {
    throw PreconditionError("most_balanced_bibridge: graph has no 2-edge-cut (3-edge-connected)");
  }
  // cuts are already in lexicographic order; stable min keeps the first tie.
  auto best = std::min_element(cuts.begin(), cuts.end(), [](const BiBridge& x, const BiBridge& y) {
    return x.balance < y.balance;
  });
  return *best;
}

}  // namespace cubiclab
