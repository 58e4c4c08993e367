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

#include "serialize.hpp"

namespace cubiclab::json {

Json edge(const Edge& e) { return Json::array({e.u, e.v}); }

Json vertices(std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json graph(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["graph6"] = to_graph6(g);
  return j;
}

Json bibridge(const BiBridge& bb) {
  Json j;
  j["e1"] = edge(bb.e1);
  j["e2"] = edge(bb.e2);
  j["side_a"] = vertices(bb.side_a);
  j["side_b"] = vertices(bb.side_b);
  j["balance"] = bb.balance;
  return j;
}

Json profile(const DistanceProfile& p) {
  Json j;
  j["root"] = p.root;
  j["dist"] = p.dist;
  j["d_max"] = p.d_max;
  return j;
}

Json classify(const Graph& g) {
  const auto facts = basic_predicates(g);
  Json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["is_connected"] = facts.is_connected;
  j["is_cubic"] = facts.is_cubic;
  if (!facts.is_connected || !facts.is_cubic) return j;
  const auto cls = classify_connectivity(g);
  j["bridge_count"] = cls.bridge_count;
  j["is_bridge_graph"] = cls.is_bridge_graph;
  j["is_biconnected_paper"] = cls.is_biconnected_paper;
  j["is_three_connected"] = cls.is_three_connected;
  Json bridges = Json::array();
  for (const Edge& e : find_bridges(g)) bridges.push_back(edge(e));
  j["bridges"] = std::move(bridges);
  if (g.order() >= 3) {
    const auto ham = has_hamiltonian_cycle(g);
    j["is_hamiltonian"] = ham.is_hamiltonian;
    j["certificate"] = to_string(ham.certificate);
    j["witness"] = ham.witness ? vertices(*ham.witness) : Json(nullptr);
  }
  return j;
}

Json record(const ConstructionRecord& rec) {
  Json j;
  j["source"] = graph(rec.source);
  j["chosen_bibridge"] = bibridge(rec.chosen_bibridge);
  j["selected_side"] = rec.selected_side == SideLabel::kA ? "a" : "b";
  j["g_prime"] = graph(rec.g_prime);
  j["bridge"] = edge(rec.bridge);
  j["w"] = rec.w;
  j["x"] = rec.x;
  j["y"] = rec.deg2_nodes.first;
  j["z"] = rec.deg2_nodes.second;
  j["b1"] = rec.attachments.first;
  j["b2"] = rec.attachments.second;
  j["g1_side"] = vertices(rec.g1_side);
  j["v0"] = rec.v0;
  j["profile"] = profile(rec.profile);
  return j;
}

Json family(const InsertionFamily& fam) {
  Json j;
  j["record"] = record(fam.record);
  j["mode"] = to_string(fam.mode);
  j["cycle_edge_orbits"] = fam.cycle_edge_orbits;
  Json members = Json::array();
  for (const auto& m : fam.members) {
    Json mj;
    mj["edge"] = edge(m.edge);
    mj["graph6"] = to_graph6(m.graph);
    mj["canonical"] = m.canonical;
    members.push_back(std::move(mj));
  }
  j["members"] = std::move(members);
  Json inel = Json::array();
  for (const auto& orbit : fam.ineligible_orbits) {
    Json o = Json::array();
    for (const Edge& e : orbit) o.push_back(edge(e));
    inel.push_back(std::move(o));
  }
  j["ineligible_orbits"] = std::move(inel);
  j["pairwise_noniso"] = fam.pairwise_noniso;
  Json coll = Json::array();
  for (const auto& [a, b] : fam.collisions) coll.push_back(Json::array({a, b}));
  j["collisions"] = std::move(coll);
  return j;
}

Json distance_bound(const DistanceBoundReport& r) {
  Json j;
  j["d_max"] = r.d_max;
  j["distinct_full_group"] = r.distinct_full_group;
  j["distinct_stabilizer"] = r.distinct_stabilizer;
  j["holds_full_group"] = r.holds_full_group;
  j["holds_stabilizer"] = r.holds_stabilizer;
  j["facilitated"] = r.facilitated;
  j["every_distance_facilitated"] = r.every_distance_facilitated;
  return j;
}

Json complete_tree(const CompleteTreeReport& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["region"] = vertices(r.region);
  j["tree_size"] = r.tree_size;
  j["k"] = r.k;
  j["k_whole"] = r.k_whole ? Json(*r.k_whole) : Json(nullptr);
  j["step"] = r.step;
  return j;
}

Json outcome(const ReduceOutcome& o) {
  Json j;
  j["inserted"] = edge(o.inserted);
  j["graph"] = o.graph ? graph(*o.graph) : Json(nullptr);
  j["complete_tree"] = o.complete_tree ? complete_tree(*o.complete_tree) : Json(nullptr);
  Json steps = Json::array();
  for (const auto& s : o.steps) {
    Json sj;
    sj["case"] = s.case_name;
    sj["order_before"] = s.order_before;
    sj["order_after"] = s.order_after;
    sj["region_size"] = s.region_size;
    sj["k"] = s.k;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json tree_match(const CompleteTreeMatch& m) {
  Json j;
  j["matches"] = m.matches;
  j["tree_size"] = m.tree_size;
  j["k"] = m.k;
  j["k_whole"] = m.k_whole ? Json(*m.k_whole) : Json(nullptr);
  Json sides = Json::array();
  for (const auto& s : m.sides) {
    Json sj;
    sj["bridge"] = edge(s.bridge);
    sj["root"] = s.root;
    sj["side_size"] = s.side_size;
    sj["k"] = s.k;
    sj["k_whole"] = s.k_whole ? Json(*s.k_whole) : Json(nullptr);
    sj["target_size"] = s.target_size;
    sj["region"] = vertices(s.region);
    sj["complete_tree"] = s.complete_tree;
    sj["size_in_range"] = s.size_in_range;
    sj["matches"] = s.matches;
    sides.push_back(std::move(sj));
  }
  j["sides"] = std::move(sides);
  return j;
}

}  // namespace cubiclab::json
