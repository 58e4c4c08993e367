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

#include "cubiclab/reduction.hpp"

#include <algorithm>

#include "cubiclab/connectivity.hpp"

namespace cubiclab {
namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<Triangle> all_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.adjacent(u, w)) out.push_back({{u, v, w}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int shared_corners(const Triangle& a, const Triangle& b) {
  int n = 0;
  for (Vertex x : a.v) n += std::count(b.v.begin(), b.v.end(), x) > 0 ? 1 : 0;
  return n;
}

// The neighbors of v other than `except`.
std::vector<Vertex> others(const Graph& g, Vertex v, Vertex except) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (w != except) out.push_back(w);
  }
  return out;
}

// Why reduce_horizontal_edge would reject e, or empty when it would not.
std::string horizontal_defect(const Graph& a, Edge e) {
  if (!a.adjacent(e.u, e.v)) return to_string(e) + " is not an edge";
  if (a.degree(e.u) != 3 || a.degree(e.v) != 3) return "endpoints of " + to_string(e) + " are not degree 3";
  const auto nu = others(a, e.u, e.v);
  const auto nv = others(a, e.v, e.u);
  for (Vertex s : nu) {
    if (std::count(nv.begin(), nv.end(), s)) {
      return "ends of " + to_string(e) + " share neighbor " + std::to_string(s) +
             " (triangle present; case misrouted)";
    }
  }
  if (a.adjacent(nu[0], nu[1])) {
    return "neighbors " + std::to_string(nu[0]) + " and " + std::to_string(nu[1]) + " of " +
           std::to_string(e.u) + " are already adjacent (edge would be duplicated)";
  }
  if (a.adjacent(nv[0], nv[1])) {
    return "neighbors " + std::to_string(nv[0]) + " and " + std::to_string(nv[1]) + " of " +
           std::to_string(e.v) + " are already adjacent (edge would be duplicated)";
  }
  return {};
}

struct SideTransfer {
  std::vector<Vertex> side;
  Vertex v0 = 0;
  Vertex anchor = 0;
};

SideTransfer transfer_side(const Graph& out, const std::vector<Vertex>& remap,
                           const std::vector<Vertex>& added, const std::vector<Vertex>& side,
                           Vertex v0, Vertex anchor) {
  SideTransfer t;
  for (Vertex s : side) {
    if (remap[s] >= 0) t.side.push_back(remap[s]);
  }
  t.side.insert(t.side.end(), added.begin(), added.end());
  std::sort(t.side.begin(), t.side.end());
  CUBICLAB_CHECK(remap[anchor] >= 0, "reduction removed the bridge end off the side");
  t.anchor = remap[anchor];
  if (remap[v0] >= 0) {
    t.v0 = remap[v0];
  } else {
    auto nb = out.neighbors(t.anchor);
    auto it = std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return contains(t.side, w); });
    CUBICLAB_CHECK(it != nb.end(), "no side vertex adjacent to the bridge end after reduction");
    t.v0 = *it;
  }
  return t;
}

// Surviving side vertices are no farther from v0 than before.
bool distances_kept(const DistanceProfile& before, const std::vector<Vertex>& side,
                    const std::vector<Vertex>& remap, const DistanceProfile& after) {
  for (Vertex s : side) {
    if (remap[s] < 0) continue;
    const int d = after.dist[remap[s]];
    if (d == kUnreachable || d > before.dist[s]) return false;
  }
  return true;
}

}  // namespace

const char* case_name(const RegionCase& c) {
  switch (c.index()) {
    case 0: return "isolated_triangle";
    case 1: return "adjacent_triangles";
    case 2: return "horizontal_edge";
    default: return "complete_tree";
  }
}

int floor_fifth_root(long long k) {
  if (k <= 0) return 0;
  long long s = 0;
  while ((s + 1) * (s + 1) * (s + 1) * (s + 1) * (s + 1) <= k) ++s;
  return static_cast<int>(s);
}

ReducibleState make_reducible_state(Graph a, Vertex v0, Vertex anchor, std::vector<Vertex> side,
                                    OrbitMode mode) {
  std::sort(side.begin(), side.end());
  CUBICLAB_REQUIRE(contains(side, v0), "reducible state: v0 must lie on the side");
  CUBICLAB_REQUIRE(!contains(side, anchor), "reducible state: anchor must lie off the side");
  ReducibleState st;
  st.a = std::move(a);
  st.v0 = v0;
  st.anchor = anchor;
  st.side = std::move(side);
  st.mode = mode;
  CUBICLAB_CHECK(is_connected(st.a) && is_cubic(st.a), "state graph must be connected and cubic");
  const auto bridges = find_bridges(st.a);
  CUBICLAB_CHECK(std::binary_search(bridges.begin(), bridges.end(), Edge::of(v0, anchor)),
                 "v0-anchor must be a bridge");
  const auto sub = induced_subgraph(st.a, st.side);
  st.k = distinct_cycle_edges(sub.graph, mode, sub.to_new[v0]).count;
  if (st.a.order() <= kAutomorphismMaxOrder) {
    st.k_whole = distinct_cycle_edges(st.a, mode, v0).count;
  }
  CUBICLAB_CHECK(st.k >= 1, "side has no cycle edge");
  st.profile = bfs_distances(st.a, v0, st.side);
  return st;
}

ReducibleState reducible_state_from(const ConstructionRecord& rec, Edge e, OrbitMode mode) {
  return make_reducible_state(cycle_insertion(rec, e), rec.v0, rec.w, rec.g1_side, mode);
}

APrimeRegion extract_a_prime(const ReducibleState& st, RegionOptions options) {
  APrimeRegion r;
  r.target_size = options.size_override.value_or(floor_fifth_root(st.k));
  if (r.target_size < 2) {
    throw RegionUnderflowError("region underflow: selection size " +
                               std::to_string(r.target_size) + " (k=" + std::to_string(st.k) +
                               ") is below 2");
  }
  if (static_cast<int>(st.side.size()) < r.target_size) {
    throw RegionUnderflowError("region underflow: side has " + std::to_string(st.side.size()) +
                               " vertices, selection needs " + std::to_string(r.target_size));
  }
  std::vector<Vertex> order(st.side);
  std::stable_sort(order.begin(), order.end(), [&](Vertex p, Vertex q) {
    return st.profile.dist[p] < st.profile.dist[q];
  });
  r.selected.assign(order.begin(), order.begin() + r.target_size);
  int far = 0;
  for (Vertex v : r.selected) far = std::max(far, st.profile.dist[v]);
  for (Vertex v : r.selected) {
    if (st.profile.dist[v] < far) r.vertices.push_back(v);
  }
  std::sort(r.selected.begin(), r.selected.end());
  std::sort(r.vertices.begin(), r.vertices.end());
  r.shape = classify_region(st.a, r.vertices, st.profile);
  return r;
}

RegionCase classify_region(const Graph& a, std::span<const Vertex> region_in,
                           const DistanceProfile& profile) {
  CUBICLAB_REQUIRE(!region_in.empty(), "classify_region: empty region");
  std::vector<Vertex> region(region_in.begin(), region_in.end());
  std::sort(region.begin(), region.end());

  const auto triangles = all_triangles(a);
  std::vector<Triangle> inside;
  for (const auto& t : triangles) {
    if (std::all_of(t.v.begin(), t.v.end(), [&](Vertex v) { return contains(region, v); })) {
      inside.push_back(t);
    }
  }
  auto partner = [&](const Triangle& t) -> const Triangle* {
    for (const auto& o : triangles) {
      if (o != t && shared_corners(t, o) == 2) return &o;
    }
    return nullptr;
  };
  for (const auto& t : inside) {
    if (!partner(t)) return IsolatedTriangleCase{t};
  }
  if (!inside.empty()) {
    const Triangle& t = inside.front();
    const Triangle& o = *partner(t);
    std::vector<Vertex> centers, tips;
    for (Vertex v : t.v) {
      (std::count(o.v.begin(), o.v.end(), v) ? centers : tips).push_back(v);
    }
    for (Vertex v : o.v) {
      if (!std::count(t.v.begin(), t.v.end(), v)) tips.push_back(v);
    }
    std::sort(tips.begin(), tips.end());
    return AdjacentTrianglesCase{Diamond{tips[0], tips[1], centers[0], centers[1]}};
  }

  std::optional<Edge> first_horizontal;
  for (Vertex u : region) {
    for (Vertex v : a.neighbors(u)) {
      if (v <= u || !contains(region, v)) continue;
      if (profile.dist[u] != profile.dist[v]) continue;
      const Edge e{u, v};
      if (!first_horizontal) first_horizontal = e;
      if (horizontal_defect(a, e).empty()) return HorizontalEdgeCase{e};
    }
  }
  // Only unreducible horizontal edges: hand the least one on so the reducer
  // reports the defect.
  if (first_horizontal) return HorizontalEdgeCase{*first_horizontal};
  return CompleteTreeCase{};
}

ReductionStep reduce_isolated_triangle(const Graph& a, const Triangle& t) {
  const auto [p, q, r] = t.v;
  for (Vertex v : t.v) {
    CUBICLAB_REQUIRE(a.has_vertex(v), "reduce_isolated_triangle: vertex out of range");
    CUBICLAB_REQUIRE(a.degree(v) == 3, "reduce_isolated_triangle: corner is not degree 3");
  }
  CUBICLAB_REQUIRE(p != q && q != r && p != r && a.adjacent(p, q) && a.adjacent(q, r) &&
                       a.adjacent(p, r),
                   "reduce_isolated_triangle: corners do not form a triangle");
  std::vector<Vertex> ext;
  for (Vertex v : t.v) {
    for (Vertex w : a.neighbors(v)) {
      if (w != p && w != q && w != r) ext.push_back(w);
    }
  }
  std::sort(ext.begin(), ext.end());
  auto dup = std::adjacent_find(ext.begin(), ext.end());
  if (dup != ext.end()) {
    throw PreconditionError("reduce_isolated_triangle: shared external neighbor " +
                            std::to_string(*dup) +
                            " (the triangle shares an edge with another triangle)");
  }
  const bool was_cubic = is_cubic(a);
  GraphEditor ed(a);
  for (Vertex v : t.v) ed.remove_vertex(v);
  const Vertex c = ed.add_vertex();
  for (Vertex w : ext) ed.add_edge(c, w);
  auto res = ed.finish();
  if (was_cubic) CUBICLAB_CHECK(is_cubic(res.graph), "triangle reduction broke regularity");
  const Vertex added = res.remap[c];
  return {std::move(res.graph), std::move(res.remap), {added}};
}

ReductionStep reduce_adjacent_triangles(const Graph& a, const Diamond& d,
                                        const InsertionScope* scope) {
  const std::array<Vertex, 4> vs{d.tip1, d.tip2, d.center1, d.center2};
  for (Vertex v : vs) {
    CUBICLAB_REQUIRE(a.has_vertex(v) && a.degree(v) == 3,
                     "reduce_adjacent_triangles: diamond vertex missing or not degree 3");
  }
  CUBICLAB_REQUIRE(a.adjacent(d.center1, d.center2) && a.adjacent(d.center1, d.tip1) &&
                       a.adjacent(d.center1, d.tip2) && a.adjacent(d.center2, d.tip1) &&
                       a.adjacent(d.center2, d.tip2),
                   "reduce_adjacent_triangles: vertices do not form a diamond");
  CUBICLAB_REQUIRE(!a.adjacent(d.tip1, d.tip2),
                   "reduce_adjacent_triangles: tips adjacent (K4 component)");
  auto external = [&](Vertex tip) {
    for (Vertex w : a.neighbors(tip)) {
      if (w != d.center1 && w != d.center2) return w;
    }
    return -1;
  };
  const Vertex ex1 = external(d.tip1);
  const Vertex ex2 = external(d.tip2);
  if (ex1 == ex2) {
    throw PreconditionError(
        "reduce_adjacent_triangles: both edges leaving the diamond end at vertex " +
        std::to_string(ex1) + ", whose third edge is then a bridge; the diamond is not on a "
        "bridgeless side");
  }

  GraphEditor ed(a);
  for (Vertex v : vs) ed.remove_vertex(v);
  const Vertex p = ed.add_vertex();
  ed.add_edge(p, ex1);
  ed.add_edge(p, ex2);
  const Vertex q = ed.add_vertex();
  ed.add_edge(q, p);

  const auto partial = ed.finish();
  const auto bridges = find_bridges_any(partial.graph);
  std::vector<Vertex> inverse(partial.graph.order());
  for (Vertex old = 0; old < static_cast<int>(partial.remap.size()); ++old) {
    if (partial.remap[old] >= 0) inverse[partial.remap[old]] = old;
  }

  std::vector<Vertex> scope_side;
  if (scope) {
    for (Vertex s : scope->side) {
      if (s < a.order() && ed.alive(s)) scope_side.push_back(s);
    }
    scope_side.push_back(p);
  }
  std::string last_reason = "no edge avoids p and q";
  for (const Edge& pe : partial.graph.edges()) {
    const Edge e = Edge::of(inverse[pe.u], inverse[pe.v]);
    if (e.touches(p) || e.touches(q)) continue;
    if (std::binary_search(bridges.begin(), bridges.end(), pe)) continue;
    GraphEditor trial(ed);
    trial.remove_edge(e.u, e.v);
    trial.add_edge(e.u, q);
    trial.add_edge(e.v, q);
    auto res = trial.finish();
    if (scope) {
      if (!contains(scope_side, e.u) || !contains(scope_side, e.v)) continue;
      const auto moved = transfer_side(res.graph, res.remap, {res.remap[p], res.remap[q]},
                                       scope->side, scope->v0, scope->anchor);
      const auto after = bfs_distances(res.graph, moved.v0, moved.side);
      if (!distances_kept(scope->profile, scope->side, res.remap, after)) {
        last_reason = "every side cycle edge lengthens some distance from v0";
        continue;
      }
    }
    CUBICLAB_CHECK(is_cubic(res.graph) || !is_cubic(a), "diamond reduction broke regularity");
    return {std::move(res.graph), res.remap, {res.remap[p], res.remap[q]}};
  }
  throw PreconditionError("reduce_adjacent_triangles: no eligible cycle edge for the closing "
                          "insertion (" + last_reason + ")");
}

ReductionStep reduce_horizontal_edge(const Graph& a, Edge e) {
  e = Edge::of(e.u, e.v);
  CUBICLAB_REQUIRE(a.has_vertex(e.u) && a.has_vertex(e.v),
                   "reduce_horizontal_edge: vertex out of range");
  const auto defect = horizontal_defect(a, e);
  if (!defect.empty()) throw PreconditionError("reduce_horizontal_edge: " + defect);
  const auto nu = others(a, e.u, e.v);
  const auto nv = others(a, e.v, e.u);
  const bool was_cubic = is_cubic(a);
  GraphEditor ed(a);
  ed.remove_vertex(e.u);
  ed.remove_vertex(e.v);
  ed.add_edge(nu[0], nu[1]);
  ed.add_edge(nv[0], nv[1]);
  auto res = ed.finish();
  if (was_cubic) CUBICLAB_CHECK(is_cubic(res.graph), "edge reduction broke regularity");
  return {std::move(res.graph), std::move(res.remap), {}};
}

ReducibleState apply_reduction(const ReducibleState& st, const RegionCase& shape) {
  ReductionStep step;
  if (const auto* c = std::get_if<IsolatedTriangleCase>(&shape)) {
    step = reduce_isolated_triangle(st.a, c->triangle);
  } else if (const auto* c = std::get_if<AdjacentTrianglesCase>(&shape)) {
    InsertionScope scope{st.v0, st.anchor, st.side, st.profile};
    step = reduce_adjacent_triangles(st.a, c->diamond, &scope);
  } else if (const auto* c = std::get_if<HorizontalEdgeCase>(&shape)) {
    CUBICLAB_REQUIRE(st.profile.dist[c->edge.u] == st.profile.dist[c->edge.v],
                     "horizontal edge ends lie at different distances from v0");
    step = reduce_horizontal_edge(st.a, c->edge);
  } else {
    throw PreconditionError("apply_reduction: the complete-tree case has no reduction");
  }

  CUBICLAB_CHECK(step.graph.order() == st.a.order() - 2, "reduction must remove two vertices");
  CUBICLAB_CHECK(is_connected(step.graph), "reduction disconnected the graph");
  CUBICLAB_CHECK(is_cubic(step.graph), "reduction result is not cubic");
  const auto moved = transfer_side(step.graph, step.remap, step.added, st.side, st.v0, st.anchor);
  ReducibleState next =
      make_reducible_state(std::move(step.graph), moved.v0, moved.anchor, moved.side, st.mode);
  CUBICLAB_CHECK(distances_kept(st.profile, st.side, step.remap, next.profile),
                 std::string("distance from v0 increased in ") + case_name(shape));
  return next;
}

ReduceOutcome reduce_to_n(const ConstructionRecord& rec, Edge e, ReduceOptions options) {
  ReduceOutcome out;
  out.inserted = Edge::of(e.u, e.v);
  ReducibleState st = reducible_state_from(rec, e, options.mode);
  for (int step = 0; step < 2; ++step) {
    const auto region = extract_a_prime(st, options.region);
    if (std::holds_alternative<CompleteTreeCase>(region.shape)) {
      out.complete_tree = CompleteTreeReport{to_graph6(st.a),
                                             region.vertices,
                                             static_cast<int>(region.vertices.size()),
                                             st.k,
                                             st.k_whole,
                                             step};
      return out;
    }
    const int before = st.a.order();
    const int k = st.k;
    st = apply_reduction(st, region.shape);
    out.steps.push_back({case_name(region.shape), before, st.a.order(),
                         static_cast<int>(region.vertices.size()), k});
  }
  CUBICLAB_CHECK(st.a.order() == rec.source.order(), "reduced graph must have n vertices");
  out.graph = std::move(st.a);
  return out;
}

}  // namespace cubiclab
