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
#include <cstdio>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubiclab/census.hpp"
#include "cubiclab/connectivity.hpp"
#include "cubiclab/construction.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/hamilton.hpp"
#include "cubiclab/reduction.hpp"
#include "parallel.hpp"

namespace cubiclab {
namespace {

using ordered_json = nlohmann::ordered_json;

struct GraphFacts {
  bool hamiltonian = false;
  ConnectivityClass cls;
};

GraphFacts classify_one(const Graph& g, bool verify_shortcut) {
  GraphFacts f;
  f.cls = classify_connectivity(g);
  f.hamiltonian = has_hamiltonian_cycle(g).is_hamiltonian;
  if (f.cls.is_bridge_graph) {
    CUBICLAB_CHECK(!f.hamiltonian, "census: bridge graph " + to_graph6(g) + " reported Hamiltonian");
    if (verify_shortcut) {
      const auto full = has_hamiltonian_cycle(g, HamiltonOptions{.use_bridge_shortcut = false});
      CUBICLAB_CHECK(!full.is_hamiltonian,
                     "census: bridge graph " + to_graph6(g) + " has a Hamiltonian cycle");
    }
  }
  return f;
}

void check_even_range(int n_min, int n_max) {
  if (n_min > n_max) {
    throw PreconditionError("census: n-min " + std::to_string(n_min) + " exceeds n-max " +
                            std::to_string(n_max));
  }
  if (n_min % 2 != 0 || n_max % 2 != 0) {
    throw PreconditionError("census: bounds must be even, got " + std::to_string(n_min) + ".." +
                            std::to_string(n_max));
  }
}

std::string format_ratio(const std::optional<double>& r) {
  if (!r) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *r);
  return buf;
}

// Vertices reachable from `start` without crossing `cut`, sorted.
std::vector<Vertex> side_of(const Graph& h, Edge cut, Vertex start) {
  std::vector<bool> seen(h.order(), false);
  std::vector<Vertex> out;
  std::queue<Vertex> q;
  seen[start] = true;
  q.push(start);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    out.push_back(v);
    for (Vertex w : h.neighbors(v)) {
      if (seen[w] || Edge::of(v, w) == cut) continue;
      seen[w] = true;
      q.push(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeSideReport tree_side(const Graph& h, Edge bridge, Vertex root, OrbitMode mode) {
  TreeSideReport r;
  r.bridge = bridge;
  r.root = root;
  const auto side = side_of(h, bridge, root);
  r.side_size = static_cast<int>(side.size());
  if (r.side_size > kAutomorphismMaxOrder) {
    throw PreconditionError("is_complete_tree_at_bridge: side of " + std::to_string(r.side_size) +
                            " vertices exceeds the automorphism bound " +
                            std::to_string(kAutomorphismMaxOrder));
  }
  const auto sub = induced_subgraph(h, side);
  r.k = distinct_cycle_edges(sub.graph, mode, sub.to_new[root]).count;
  if (h.order() <= kAutomorphismMaxOrder) r.k_whole = distinct_cycle_edges(h, mode, root).count;

  r.target_size = std::min(floor_fifth_root(r.k), r.side_size);
  const auto profile = bfs_distances(h, root, side);
  std::vector<Vertex> order = side;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::pair(profile.dist[a], a) < std::pair(profile.dist[b], b);
  });
  order.resize(r.target_size);
  if (!order.empty()) {
    const int far = profile.dist[order.back()];
    for (Vertex v : order) {
      if (profile.dist[v] != far) r.region.push_back(v);
    }
  }
  std::sort(r.region.begin(), r.region.end());
  if (!r.region.empty()) {
    r.complete_tree = is_complete_tree_region(h, r.region, root);
    r.size_in_range = tree_size_in_range(static_cast<long long>(r.region.size()), r.k);
  }
  r.matches = r.complete_tree && r.size_in_range;
  return r;
}

}  // namespace

std::vector<CensusRow> census_table(int n_min, int n_max, CensusOptions options) {
  check_even_range(n_min, n_max);
  std::vector<CensusRow> rows;
  for (int n = n_min; n <= n_max; n += 2) {
    const auto graphs = enumerate_cubic(n);
    const auto facts = detail::parallel_map(graphs.size(), options.jobs, [&](std::size_t i) {
      return classify_one(graphs[i], options.verify_bridge_shortcut);
    });
    CensusRow row;
    row.n = n;
    for (const auto& f : facts) {
      ++row.total_cubic;
      if (f.hamiltonian) {
        ++row.hamiltonian;
      } else {
        ++row.non_hamiltonian;
      }
      if (f.cls.is_bridge_graph) ++row.bridge;
      if (f.cls.is_biconnected_paper) ++row.biconnected_paper;
      if (f.cls.is_three_connected) ++row.three_connected;
      if (!f.hamiltonian && f.cls.is_bridge_graph) ++row.non_ham_and_bridge;
      if (!f.hamiltonian && !f.cls.is_three_connected) ++row.non_ham_non3conn;
    }
    if (row.non_hamiltonian > 0) {
      row.bridge_fraction_of_non_ham =
          static_cast<double>(row.non_ham_and_bridge) / static_cast<double>(row.non_hamiltonian);
    }
    CUBICLAB_CHECK(row.total_cubic == row.hamiltonian + row.non_hamiltonian,
                   "census: Hamiltonian split does not add up");
    CUBICLAB_CHECK(row.total_cubic == row.bridge + row.biconnected_paper + row.three_connected,
                   "census: connectivity split does not add up");
    CUBICLAB_CHECK(row.non_ham_and_bridge == row.bridge,
                   "census: some bridge graph counted as Hamiltonian");
    rows.push_back(row);
  }
  return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,total_cubic,hamiltonian,non_hamiltonian,bridge,biconnected_paper,three_connected,"
         "non_ham_and_bridge,non_ham_non3conn,bridge_fraction_of_non_ham\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.total_cubic << ',' << r.hamiltonian << ',' << r.non_hamiltonian << ','
        << r.bridge << ',' << r.biconnected_paper << ',' << r.three_connected << ','
        << r.non_ham_and_bridge << ',' << r.non_ham_non3conn << ','
        << format_ratio(r.bridge_fraction_of_non_ham) << '\n';
  }
  return out.str();
}

std::string census_json(const std::vector<CensusRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["n"] = r.n;
    j["total_cubic"] = r.total_cubic;
    j["hamiltonian"] = r.hamiltonian;
    j["non_hamiltonian"] = r.non_hamiltonian;
    j["bridge"] = r.bridge;
    j["biconnected_paper"] = r.biconnected_paper;
    j["three_connected"] = r.three_connected;
    j["non_ham_and_bridge"] = r.non_ham_and_bridge;
    j["non_ham_non3conn"] = r.non_ham_non3conn;
    if (r.bridge_fraction_of_non_ham) {
      j["bridge_fraction_of_non_ham"] = *r.bridge_fraction_of_non_ham;
    } else {
      j["bridge_fraction_of_non_ham"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

bool tree_size_in_range(long long size, long long k) {
  if (size <= 0 || k <= 0) return false;
  long long p = 1;
  for (int i = 0; i < 5; ++i) {
    p *= size;
    if (p >= k) return false;  // size^5 >= k already
  }
  return p < k && k <= 32 * p;
}

bool is_complete_tree_region(const Graph& g, std::span<const Vertex> region, Vertex root) {
  std::vector<Vertex> subset(region.begin(), region.end());
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (!std::binary_search(subset.begin(), subset.end(), root)) return false;
  const auto sub = induced_subgraph(g, subset);
  const Graph& t = sub.graph;
  if (t.size() != t.order() - 1 || !is_connected(t)) return false;
  if (t.order() == 1) return true;

  const Vertex r = sub.to_new[root];
  const auto profile = bfs_distances(t, r);
  int leaf_depth = -1;
  for (Vertex v = 0; v < t.order(); ++v) {
    const int children = t.degree(v) - (v == r ? 0 : 1);
    if (children == 0) {
      if (leaf_depth == -1) leaf_depth = profile.dist[v];
      if (profile.dist[v] != leaf_depth) return false;
    } else if (children != 2) {
      return false;
    }
  }
  return true;
}

CompleteTreeMatch is_complete_tree_at_bridge(const Graph& h, OrbitMode mode) {
  CUBICLAB_REQUIRE(is_connected(h) && is_cubic(h),
                   "is_complete_tree_at_bridge: input must be connected and cubic");
  const auto bridges = find_bridges(h);
  CUBICLAB_REQUIRE(!bridges.empty(), "is_complete_tree_at_bridge: input has no bridge");
  CompleteTreeMatch out;
  for (const Edge& b : bridges) {
    for (Vertex root : {b.u, b.v}) out.sides.push_back(tree_side(h, b, root, mode));
  }
  const TreeSideReport* pick = &out.sides.front();
  for (const auto& s : out.sides) {
    if (s.matches) {
      pick = &s;
      break;
    }
  }
  out.matches = pick->matches;
  out.tree_size = static_cast<int>(pick->region.size());
  out.k = pick->k;
  out.k_whole = pick->k_whole;
  return out;
}

ConjectureProbeRow conjecture_probe(int n, int jobs) {
  ConjectureProbeRow row;
  row.n = n;
  const auto small = enumerate_cubic(n);
  const auto large = enumerate_cubic(n + 2);
  const auto small_bridge = detail::parallel_map(small.size(), jobs, [&](std::size_t i) {
    return classify_connectivity(small[i]).is_bridge_graph ? 1 : 0;
  });
  const auto large_match = detail::parallel_map(large.size(), jobs, [&](std::size_t i) {
    if (!classify_connectivity(large[i]).is_bridge_graph) return 0;
    return is_complete_tree_at_bridge(large[i]).matches ? 1 : 0;
  });
  for (int b : small_bridge) row.rhs_count += b;
  for (int m : large_match) row.lhs_count += m;
  row.injection_possible = row.lhs_count <= row.rhs_count;
  return row;
}

std::string probe_csv(const std::vector<ConjectureProbeRow>& rows) {
  std::ostringstream out;
  out << "n,lhs_count,rhs_count,injection_possible\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.lhs_count << ',' << r.rhs_count << ','
        << (r.injection_possible ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string probe_json(const std::vector<ConjectureProbeRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["n"] = r.n;
    j["lhs_count"] = r.lhs_count;
    j["rhs_count"] = r.rhs_count;
    j["injection_possible"] = r.injection_possible;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

FamilyStats family_size_stats(int n, OrbitMode mode, int jobs) {
  FamilyStats stats;
  stats.n = n;
  stats.mode = mode;
  std::vector<Graph> inputs;
  for (Graph& g : enumerate_cubic(n)) {
    if (classify_connectivity(g).is_biconnected_paper) inputs.push_back(std::move(g));
  }
  struct Partial {
    FamilyStatsRow row;
    std::vector<std::string> canon;
  };
  auto parts = detail::parallel_map(inputs.size(), jobs, [&](std::size_t i) {
    Partial p;
    const auto rec = bridge_construct(inputs[i]);
    const auto fam = insertion_family(rec, mode);
    const auto view = side_view(rec);
    p.row.source_graph6 = to_graph6(inputs[i]);
    p.row.k = distinct_cycle_edges(view.sub.graph, mode, view.root).count;
    p.row.d_max = rec.profile.d_max;
    p.row.family_size = static_cast<int>(fam.members.size());
    p.row.ineligible_orbits = static_cast<int>(fam.ineligible_orbits.size());
    p.row.within_collisions = static_cast<int>(fam.collisions.size());
    for (const auto& m : fam.members) p.canon.push_back(m.canonical);
    std::sort(p.canon.begin(), p.canon.end());
    p.canon.erase(std::unique(p.canon.begin(), p.canon.end()), p.canon.end());
    return p;
  });
  std::map<std::string, std::vector<int>> owners;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    stats.rows.push_back(parts[i].row);
    for (const auto& c : parts[i].canon) owners[c].push_back(static_cast<int>(i));
  }
  for (auto& [canon, sources] : owners) {
    if (sources.size() > 1) stats.cross_collisions.push_back({canon, sources});
  }
  return stats;
}

std::string family_stats_json(const FamilyStats& stats) {
  ordered_json j;
  j["n"] = stats.n;
  j["mode"] = to_string(stats.mode);
  ordered_json rows = ordered_json::array();
  for (const auto& r : stats.rows) {
    ordered_json row;
    row["source"] = r.source_graph6;
    row["k"] = r.k;
    row["d_max"] = r.d_max;
    row["family_size"] = r.family_size;
    row["ineligible_orbits"] = r.ineligible_orbits;
    row["within_collisions"] = r.within_collisions;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  ordered_json cross = ordered_json::array();
  for (const auto& c : stats.cross_collisions) {
    cross.push_back({{"canonical", c.canonical}, {"sources", c.sources}});
  }
  j["cross_collisions"] = std::move(cross);
  return j.dump(2) + "\n";
}

}  // namespace cubiclab
