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

#include "cubiclab/construction.hpp"

#include <algorithm>
#include <optional>
#include <map>

#include "cubiclab/error.hpp"

namespace cubiclab {
namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void check_distances_not_increased(const DistanceProfile& before, const DistanceProfile& after,
                                   const std::vector<Vertex>& side) {
  for (Vertex v : side) {
    CUBICLAB_CHECK(after.dist[v] != kUnreachable && after.dist[v] <= before.dist[v],
                   "distance from v0 grew at vertex " + std::to_string(v));
  }
}

}  // namespace

SideLabel select_g1_side(const Graph& g, const BiBridge& bb) {
  const auto a = induced_subgraph(g, bb.side_a);
  const auto b = induced_subgraph(g, bb.side_b);
  const int count_a = distinct_cycle_edges(a.graph, OrbitMode::kFullGroup).count;
  const int count_b = distinct_cycle_edges(b.graph, OrbitMode::kFullGroup).count;
  if (count_a != count_b) return count_a > count_b ? SideLabel::kA : SideLabel::kB;
  const auto canon_a = canonical_form(a.graph).graph6;
  const auto canon_b = canonical_form(b.graph).graph6;
  if (canon_a != canon_b) return canon_a < canon_b ? SideLabel::kA : SideLabel::kB;
  return contains(bb.side_a, 0) ? SideLabel::kA : SideLabel::kB;
}

ConstructionRecord bridge_construct(const Graph& g) {
  CUBICLAB_REQUIRE(is_connected(g), "bridge_construct: graph is disconnected");
  CUBICLAB_REQUIRE(is_cubic(g), "bridge_construct: graph is not cubic");
  const auto cls = classify_connectivity(g);
  if (cls.is_bridge_graph) {
    throw PreconditionError("bridge_construct: input already has a bridge");
  }
  if (cls.is_three_connected) {
    throw PreconditionError("bridge_construct: input is 3-connected (no bi-bridge)");
  }

  ConstructionRecord rec;
  rec.source = g;
  rec.chosen_bibridge = most_balanced_bibridge(g);
  rec.selected_side = select_g1_side(g, rec.chosen_bibridge);
  const auto& bb = rec.chosen_bibridge;
  const auto& kept =
      rec.selected_side == SideLabel::kA ? bb.side_a : bb.side_b;

  auto split = [&](Edge e) {
    return contains(kept, e.u) ? std::pair{e.v, e.u} : std::pair{e.u, e.v};
  };
  const auto [a1, b1] = split(bb.e1);
  const auto [a2, b2] = split(bb.e2);
  CUBICLAB_CHECK(contains(kept, b1) && contains(kept, b2) && !contains(kept, a1) &&
                     !contains(kept, a2),
                 "cut edge does not cross the chosen partition");

  GraphEditor ed(g);
  ed.remove_edge(bb.e1.u, bb.e1.v);
  ed.remove_edge(bb.e2.u, bb.e2.v);
  const Vertex w = ed.add_vertex();
  const Vertex x = ed.add_vertex();
  const Vertex y = ed.add_vertex();
  const Vertex z = ed.add_vertex();
  ed.add_edge(w, a1);
  ed.add_edge(w, a2);
  ed.add_edge(x, w);
  ed.add_edge(y, b1);
  ed.add_edge(y, x);
  ed.add_edge(z, b2);
  ed.add_edge(z, x);
  rec.g_prime = ed.finish().graph;

  rec.w = w;
  rec.x = x;
  rec.v0 = x;
  rec.bridge = Edge::of(w, x);
  rec.deg2_nodes = {y, z};
  rec.attachments = {b1, b2};
  rec.g1_side = kept;
  rec.g1_side.insert(rec.g1_side.end(), {x, y, z});
  std::sort(rec.g1_side.begin(), rec.g1_side.end());
  rec.profile = bfs_distances(rec.g_prime, x, rec.g1_side);

  const Graph& gp = rec.g_prime;
  CUBICLAB_CHECK(gp.order() == g.order() + 4, "G' must have n + 4 vertices");
  CUBICLAB_CHECK(is_connected(gp), "G' is disconnected");
  const auto bridges = find_bridges(gp);
  CUBICLAB_CHECK(bridges.size() == 1 && bridges.front() == rec.bridge,
                 "G' must have exactly the bridge w-x, found " + std::to_string(bridges.size()));
  for (Vertex v = 0; v < gp.order(); ++v) {
    const int want = (v == y || v == z) ? 2 : 3;
    CUBICLAB_CHECK(gp.degree(v) == want, "unexpected degree at vertex " + std::to_string(v));
  }
  for (Vertex v : rec.g1_side) {
    CUBICLAB_CHECK(rec.profile.dist[v] != kUnreachable, "selected side is not connected");
  }
  return rec;
}

SideView side_view(const ConstructionRecord& rec) {
  SideView s;
  s.sub = induced_subgraph(rec.g_prime, rec.g1_side);
  s.root = s.sub.to_new[rec.v0];
  return s;
}

DistanceBoundReport check_distance_bound(const ConstructionRecord& rec) {
  const auto side = side_view(rec);
  DistanceBoundReport r;
  r.d_max = rec.profile.d_max;
  r.distinct_full_group =
      static_cast<int>(edge_orbits(side.sub.graph, OrbitMode::kFullGroup).orbits.size());
  r.distinct_stabilizer = static_cast<int>(
      edge_orbits(side.sub.graph, OrbitMode::kRootStabilizer, side.root).orbits.size());
  r.holds_full_group = r.distinct_full_group >= r.d_max;
  r.holds_stabilizer = r.distinct_stabilizer >= r.d_max;

  const auto& dist = rec.profile.dist;
  std::vector<bool> seen(r.d_max + 1, false);
  for (Vertex v : rec.g1_side) {
    for (Vertex u : rec.g_prime.neighbors(v)) {
      if (!contains(rec.g1_side, u)) continue;
      CUBICLAB_CHECK(std::abs(dist[u] - dist[v]) <= 1, "BFS layers differ by more than one");
      if (dist[v] == dist[u] + 1) seen[dist[v]] = true;
    }
  }
  r.every_distance_facilitated = true;
  for (int d = 1; d <= r.d_max; ++d) {
    if (seen[d]) r.facilitated.push_back(d);
    else r.every_distance_facilitated = false;
  }
  return r;
}

bool check_side_bridgeless(const ConstructionRecord& rec) {
  const auto side = side_view(rec);
  return is_connected(side.sub.graph) && find_bridges_any(side.sub.graph).empty();
}

Graph cycle_insertion(const ConstructionRecord& rec, Edge e) {
  const Graph& gp = rec.g_prime;
  const auto [y, z] = rec.deg2_nodes;
  e = Edge::of(e.u, e.v);
  if (!gp.adjacent(e.u, e.v)) {
    throw PreconditionError("cycle_insertion: " + to_string(e) + " is not an edge of G'");
  }
  if (!contains(rec.g1_side, e.u) || !contains(rec.g1_side, e.v)) {
    throw PreconditionError("cycle_insertion: " + to_string(e) + " leaves the selected side");
  }
  if (e.touches(y) || e.touches(z)) {
    throw PreconditionError("cycle_insertion: " + to_string(e) + " touches a degree-2 node");
  }
  const auto side = side_view(rec);
  const Edge local = Edge::of(side.sub.to_new[e.u], side.sub.to_new[e.v]);
  const auto side_bridges = find_bridges_any(side.sub.graph);
  if (std::binary_search(side_bridges.begin(), side_bridges.end(), local)) {
    throw PreconditionError("cycle_insertion: " + to_string(e) + " is a bridge of the side");
  }

  // Smaller endpoint goes to y unless that duplicates an edge or leaves a
  // bridge besides w-x; then the pairing is swapped.
  auto attempt = [&](Vertex to_y, Vertex to_z) -> std::optional<Graph> {
    GraphEditor ed(gp);
    ed.remove_edge(e.u, e.v);
    if (ed.adjacent(to_y, y) || ed.adjacent(to_z, z)) return std::nullopt;
    ed.add_edge(to_y, y);
    ed.add_edge(to_z, z);
    Graph g = ed.finish().graph;
    const auto bridges = find_bridges(g);
    if (bridges.size() != 1 || bridges.front() != rec.bridge) return std::nullopt;
    return g;
  };
  auto result = attempt(e.u, e.v);
  if (!result) result = attempt(e.v, e.u);
  CUBICLAB_CHECK(result.has_value(),
                 "cycle insertion on " + to_string(e) + " leaves a bridge besides w-x under both pairings");
  Graph out = std::move(*result);
  CUBICLAB_CHECK(is_connected(out), "cycle insertion disconnected the graph");
  CUBICLAB_CHECK(is_cubic(out), "cycle insertion result is not cubic");
  check_distances_not_increased(rec.profile, bfs_distances(out, rec.v0, rec.g1_side),
                                rec.g1_side);
  return out;
}

InsertionFamily insertion_family(const ConstructionRecord& rec, OrbitMode mode) {
  InsertionFamily fam;
  fam.record = rec;
  fam.mode = mode;
  const auto side = side_view(rec);
  const auto dce = distinct_cycle_edges(side.sub.graph, mode, side.root);
  fam.cycle_edge_orbits = dce.count;
  const auto [y, z] = rec.deg2_nodes;
  const auto side_bridges = find_bridges_any(side.sub.graph);

  for (const auto& orbit : dce.partition.orbits) {
    if (std::binary_search(side_bridges.begin(), side_bridges.end(), orbit.front())) continue;
    std::vector<Edge> global;
    for (const Edge& e : orbit) {
      global.push_back(Edge::of(side.sub.to_old[e.u], side.sub.to_old[e.v]));
    }
    std::sort(global.begin(), global.end());
    auto eligible = std::find_if(global.begin(), global.end(),
                                 [&](const Edge& e) { return !e.touches(y) && !e.touches(z); });
    if (eligible == global.end()) {
      fam.ineligible_orbits.push_back(std::move(global));
      continue;
    }
    FamilyMember m;
    m.edge = *eligible;
    m.graph = cycle_insertion(rec, m.edge);
    m.canonical = canonical_form(m.graph).graph6;
    fam.members.push_back(std::move(m));
  }

  for (int i = 0; i < static_cast<int>(fam.members.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(fam.members.size()); ++j) {
      if (fam.members[i].canonical == fam.members[j].canonical) fam.collisions.emplace_back(i, j);
    }
  }
  fam.pairwise_noniso = fam.collisions.empty();
  return fam;
}

}  // namespace cubiclab
