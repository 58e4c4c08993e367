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

// Connected cubic graphs by expansion from smaller orders. Every connected
// cubic graph on n >= 6 vertices arises from one on n-2, n-4 or n-6 vertices
// by one of four local expansions:
//   edge pair  subdivide two distinct edges and join the two new vertices
//   triangle   blow a vertex up into a triangle
//   diamond    replace an edge by a diamond (tips on the old endpoints)
//   lollipop   subdivide an edge and hang a subdivided K4 off the new vertex
// Candidates are deduplicated by canonical form.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cubiclab/census.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/symmetry.hpp"
#include "parallel.hpp"

namespace cubiclab {
namespace {

using EdgeList = std::vector<Edge>;

void expand_edge_pairs(const Graph& g, std::unordered_set<std::string>& out) {
  const int n = g.order();
  const auto edges = g.edges();
  const Vertex x = n, y = n + 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      EdgeList list;
      list.reserve(edges.size() + 3);
      for (std::size_t t = 0; t < edges.size(); ++t) {
        if (t != i && t != j) list.push_back(edges[t]);
      }
      list.push_back(Edge::of(edges[i].u, x));
      list.push_back(Edge::of(edges[i].v, x));
      list.push_back(Edge::of(edges[j].u, y));
      list.push_back(Edge::of(edges[j].v, y));
      list.push_back(Edge::of(x, y));
      out.insert(canonical_form(build_graph(n + 2, list)).graph6);
    }
  }
}

void expand_triangles(const Graph& g, std::unordered_set<std::string>& out) {
  const int n = g.order();
  const auto edges = g.edges();
  const Vertex x = n, y = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    EdgeList list;
    for (const Edge& e : edges) {
      if (e == Edge::of(v, nb[1]) || e == Edge::of(v, nb[2])) continue;
      list.push_back(e);
    }
    list.push_back(Edge::of(x, nb[1]));
    list.push_back(Edge::of(y, nb[2]));
    list.push_back(Edge::of(v, x));
    list.push_back(Edge::of(v, y));
    list.push_back(Edge::of(x, y));
    out.insert(canonical_form(build_graph(n + 2, list)).graph6);
  }
}

void expand_diamonds(const Graph& g, std::unordered_set<std::string>& out) {
  const int n = g.order();
  const auto edges = g.edges();
  const Vertex t1 = n, t2 = n + 1, c1 = n + 2, c2 = n + 3;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeList list;
    for (std::size_t t = 0; t < edges.size(); ++t) {
      if (t != i) list.push_back(edges[t]);
    }
    list.push_back(Edge::of(edges[i].u, t1));
    list.push_back(Edge::of(edges[i].v, t2));
    for (Vertex c : {c1, c2}) {
      list.push_back(Edge::of(t1, c));
      list.push_back(Edge::of(t2, c));
    }
    list.push_back(Edge::of(c1, c2));
    out.insert(canonical_form(build_graph(n + 4, list)).graph6);
  }
}

void expand_lollipops(const Graph& g, std::unordered_set<std::string>& out) {
  const int n = g.order();
  const auto edges = g.edges();
  const Vertex z = n, x = n + 1, ta = n + 2, tb = n + 3, cu = n + 4, cv = n + 5;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeList list;
    for (std::size_t t = 0; t < edges.size(); ++t) {
      if (t != i) list.push_back(edges[t]);
    }
    list.push_back(Edge::of(edges[i].u, z));
    list.push_back(Edge::of(edges[i].v, z));
    list.push_back(Edge::of(z, x));
    list.push_back(Edge::of(x, ta));
    list.push_back(Edge::of(x, tb));
    for (Vertex c : {cu, cv}) {
      list.push_back(Edge::of(ta, c));
      list.push_back(Edge::of(tb, c));
    }
    list.push_back(Edge::of(cu, cv));
    out.insert(canonical_form(build_graph(n + 6, list)).graph6);
  }
}

class Enumerator {
 public:
  std::vector<Graph> level(int n) {
    std::lock_guard lock(mu_);
    for (int m = 4; m <= n; m += 2) {
      if (!cache_.contains(m)) cache_[m] = build_level(m);
    }
    return cache_.at(n);
  }

 private:
  std::vector<Graph> build_level(int n) {
    if (n == 4) return {build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
    struct Task {
      const Graph* g;
      int op;
    };
    std::vector<Task> tasks;
    auto add = [&](int m, int op) {
      if (m < 4) return;
      for (const Graph& g : cache_.at(m)) tasks.push_back({&g, op});
    };
    add(n - 2, 0);
    add(n - 2, 1);
    add(n - 4, 2);
    add(n - 6, 3);
    const int jobs = std::max(1u, std::thread::hardware_concurrency());
    auto found = detail::parallel_map(tasks.size(), jobs, [&](std::size_t i) {
      std::unordered_set<std::string> out;
      const Graph& g = *tasks[i].g;
      switch (tasks[i].op) {
        case 0: expand_edge_pairs(g, out); break;
        case 1: expand_triangles(g, out); break;
        case 2: expand_diamonds(g, out); break;
        default: expand_lollipops(g, out); break;
      }
      return std::vector<std::string>(out.begin(), out.end());
    });
    std::vector<std::string> codes;
    for (auto& part : found) codes.insert(codes.end(), part.begin(), part.end());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Graph> graphs;
    graphs.reserve(codes.size());
    for (const auto& code : codes) {
      Graph g = parse_graph6(code);
      CUBICLAB_CHECK(is_cubic(g) && is_connected(g), "enumerate: expansion left the cubic class");
      graphs.push_back(std::move(g));
    }
    return graphs;
  }

  std::mutex mu_;
  std::map<int, std::vector<Graph>> cache_;
};

Enumerator& enumerator() {
  static Enumerator instance;
  return instance;
}

}  // namespace

int enumeration_max_n() {
  const char* raw = std::getenv("CUBIC_LAB_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationMaxN;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 4 || value > kCanonicalMaxOrder) {
    throw PreconditionError(std::string("CUBIC_LAB_MAX_N must be an integer in [4, ") +
                            std::to_string(kCanonicalMaxOrder) + "], got '" + raw + "'");
  }
  return static_cast<int>(value);
}

std::vector<Graph> enumerate_cubic(int n) {
  if (n % 2 != 0) {
    throw PreconditionError("enumerate_cubic: n=" + std::to_string(n) +
                            " is odd, no cubic graph has an odd number of vertices");
  }
  if (n < 4) throw PreconditionError("enumerate_cubic: n=" + std::to_string(n) + " is below 4");
  const int bound = enumeration_max_n();
  if (n > bound) {
    throw PreconditionError("enumerate_cubic: n=" + std::to_string(n) +
                            " exceeds the enumeration bound " + std::to_string(bound) +
                            " (set CUBIC_LAB_MAX_N to raise it)");
  }
  return enumerator().level(n);
}

}  // namespace cubiclab
