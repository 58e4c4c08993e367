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

// Acceptance run: one PASS/FAIL line per criterion, evidence lines under it.
// Usage: acceptance [artifact-dir]   (default ./acceptance_artifacts)
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cubiclab/census.hpp"
#include "cubiclab/connectivity.hpp"
#include "cubiclab/construction.hpp"
#include "cubiclab/hamilton.hpp"
#include "cubiclab/reduction.hpp"
#include "cubiclab/symmetry.hpp"
#include "cubiclab/verify.hpp"
#include "oracles.hpp"
#include "serialize.hpp"

using namespace cubiclab;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kC1Seconds = 60;
constexpr double kC2Seconds = 600;
constexpr double kC3Seconds = 300;
constexpr double kC7Seconds = 600;
constexpr int kJobs = 4;
constexpr int kCorpusMaxN = 10;

int failures = 0;

void verdict(const char* id, bool ok, const std::string& what) {
  std::cout << id << " " << (ok ? "PASS" : "FAIL") << " " << what << std::endl;
  if (!ok) ++failures;
}

void note(const std::string& s) { std::cout << "   " << s << std::endl; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

std::vector<Graph> biconnected_corpus() {
  std::vector<Graph> out;
  for (int n = 4; n <= kCorpusMaxN; n += 2) {
    for (Graph& g : enumerate_cubic(n)) {
      if (classify_connectivity(g).is_biconnected_paper) out.push_back(std::move(g));
    }
  }
  return out;
}

int degree_count(const Graph& g, int d) {
  int c = 0;
  for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == d;
  return c;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::map<int, std::size_t> want{{4, 1}, {6, 2}, {8, 5}, {10, 19}};
  bool ok = true;
  std::ostringstream ev;
  for (const auto& [n, count] : want) {
    const auto mine = enumerate_cubic(n);
    const auto ref = oracle::connected_iso_classes(n <= 8 ? oracle::labeled_cubic_graphs(n)
                                                          : oracle::bfs_labeled_cubic_graphs(n));
    std::set<std::string> a, b;
    for (const Graph& g : mine) a.insert(canonical_form(g).graph6);
    for (const Graph& g : ref) b.insert(canonical_form(g).graph6);
    ok &= mine.size() == count && ref.size() == count && a == b;
    ev << " n=" << n << ":" << mine.size() << "/" << ref.size();
  }
  const double t = seconds_since(t0);
  ok &= t < kC1Seconds;
  verdict("C1", ok, "enumeration vs oracles (mine/oracle)" + ev.str() + " in " + secs(t) +
                        " (limit " + secs(kC1Seconds) + ")");
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  // census_table re-solves every bridge graph without the shortcut and
  // checks it is not Hamiltonian; the loop below adds Held-Karp.
  const auto rows = census_table(4, 14, CensusOptions{.jobs = kJobs, .verify_bridge_shortcut = true});
  long long bridge = 0, exceptions = 0;
  for (int n = 4; n <= 14; n += 2) {
    for (const Graph& g : enumerate_cubic(n)) {
      if (oracle::bridges(g).empty()) continue;
      ++bridge;
      if (oracle::hamiltonian(g) ||
          has_hamiltonian_cycle(g, HamiltonOptions{.use_bridge_shortcut = false}).is_hamiltonian) {
        ++exceptions;
      }
    }
  }
  long long census_bridge = 0;
  for (const auto& r : rows) census_bridge += r.bridge;
  const double t = seconds_since(t0);
  verdict("C2", exceptions == 0 && census_bridge == bridge && t < kC2Seconds,
          "bridge => non-Hamiltonian for n<=14: " + std::to_string(bridge) + " bridge graphs, " +
              std::to_string(exceptions) + " exceptions, jobs=" + std::to_string(kJobs) + " in " +
              secs(t) + " (limit " + secs(kC2Seconds) + ")");
  for (const auto& r : rows) {
    note("census n=" + std::to_string(r.n) + " total=" + std::to_string(r.total_cubic) +
         " non_ham=" + std::to_string(r.non_hamiltonian) + " bridge=" + std::to_string(r.bridge));
  }
}

void criterion3(const std::vector<Graph>& corpus) {
  const auto t0 = std::chrono::steady_clock::now();
  int bad_shape = 0, bad_side = 0;
  for (const Graph& g : corpus) {
    const auto rec = bridge_construct(g);
    const Graph& gp = rec.g_prime;
    if (gp.order() != g.order() + 4 || !is_connected(gp) || oracle::bridges(gp).size() != 1 ||
        degree_count(gp, 2) != 2 || degree_count(gp, 3) != g.order() + 2) {
      ++bad_shape;
    }
    const auto side = induced_subgraph(gp, rec.g1_side).graph;
    if (!check_side_bridgeless(rec) || !oracle::bridges(side).empty() || !is_connected(side)) ++bad_side;
  }
  const double t = seconds_since(t0);
  verdict("C3", bad_shape == 0 && bad_side == 0 && t < kC3Seconds,
          "construction shape and side bridgeless over " + std::to_string(corpus.size()) +
              " biconnected graphs n<=10: shape failures " + std::to_string(bad_shape) +
              ", side failures " + std::to_string(bad_side) + " in " + secs(t) + " (limit " +
              secs(kC3Seconds) + ")");
}

void criterion4(const std::vector<Graph>& corpus) {
  int stab_fail = 0, oracle_mismatch = 0, full_findings = 0;
  for (const Graph& g : corpus) {
    const auto rec = bridge_construct(g);
    const auto rep = check_distance_bound(rec);
    const auto view = side_view(rec);
    const int stab = oracle::distinct_cycle_edges(view.sub.graph, view.root);
    const int full = oracle::distinct_cycle_edges(view.sub.graph);
    oracle_mismatch += stab != rep.distinct_stabilizer || full != rep.distinct_full_group;
    stab_fail += stab < rep.d_max;
    if (full < rep.d_max) {
      ++full_findings;
      note("finding: full-group count " + std::to_string(full) + " < d_max " +
           std::to_string(rep.d_max) + " for " + to_graph6(g));
    }
  }
  verdict("C4", stab_fail == 0 && oracle_mismatch == 0,
          "stabilizer distinct cycle edges >= d_max on " + std::to_string(corpus.size()) +
              " graphs: failures " + std::to_string(stab_fail) + ", oracle mismatches " +
              std::to_string(oracle_mismatch) + ", full-group findings " +
              std::to_string(full_findings));
}

void criterion5(const std::vector<Graph>& corpus) {
  int bad_members = 0, below = 0, collisions = 0, members = 0;
  for (const Graph& g : corpus) {
    const auto rec = bridge_construct(g);
    const auto fam = insertion_family(rec);
    for (const auto& m : fam.members) {
      ++members;
      const Graph& a = m.graph;
      if (a.order() != g.order() + 4 || !is_connected(a) || !is_cubic(a) || oracle::bridges(a).empty()) {
        ++bad_members;
      }
    }
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
        if (oracle::isomorphic(fam.members[i].graph, fam.members[j].graph)) {
          ++collisions;
          note("collision: " + to_graph6(g) + " members " + std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
    if (static_cast<int>(fam.members.size()) < rec.profile.d_max) {
      ++below;
      note("family size " + std::to_string(fam.members.size()) + " < d_max " +
           std::to_string(rec.profile.d_max) + " for " + to_graph6(g) + " (eligible orbits " +
           std::to_string(fam.members.size()) + ", ineligible " +
           std::to_string(fam.ineligible_orbits.size()) + ")");
    }
  }
  verdict("C5", bad_members == 0 && below == 0 && collisions == 0,
          "insertion families n<=10: " + std::to_string(members) + " members, malformed " +
              std::to_string(bad_members) + ", family below d_max " + std::to_string(below) +
              ", within-family collisions " + std::to_string(collisions));
  const auto s10 = family_size_stats(10);
  note("cross-family collisions at n=10 (reported, not part of the verdict): " +
       std::to_string(s10.cross_collisions.size()));
}

struct SweepTally {
  int runs = 0, graphs = 0, trees = 0, underflow = 0, defects = 0, bad = 0;
};

SweepTally reduce_sweep(const std::vector<Graph>& corpus, std::optional<int> size, json::Json* out) {
  SweepTally t;
  for (const Graph& g : corpus) {
    const auto rec = bridge_construct(g);
    for (const auto& m : insertion_family(rec).members) {
      ++t.runs;
      ReduceOptions opt;
      opt.region.size_override = size;
      try {
        const auto o = reduce_to_n(rec, m.edge, opt);
        if (out) out->push_back(json::outcome(o));
        if (o.graph) {
          ++t.graphs;
          const Graph& h = *o.graph;
          if (h.order() != g.order() || !is_connected(h) || !is_cubic(h) || oracle::bridges(h).empty()) ++t.bad;
        } else {
          ++t.trees;
        }
      } catch (const RegionUnderflowError& e) {
        ++t.underflow;
        if (out) out->push_back({{"inserted", json::edge(m.edge)}, {"underflow", e.what()}});
      } catch (const InternalError&) {
        throw;
      } catch (const PreconditionError& e) {
        ++t.defects;
        if (out) out->push_back({{"inserted", json::edge(m.edge)}, {"error", e.what()}});
      }
    }
  }
  return t;
}

std::string tally(const SweepTally& t) {
  return "runs " + std::to_string(t.runs) + ", graphs " + std::to_string(t.graphs) +
         ", complete_tree " + std::to_string(t.trees) + ", underflow " + std::to_string(t.underflow) +
         ", reducer refusals " + std::to_string(t.defects) + ", malformed " + std::to_string(t.bad);
}

void criterion6(const std::vector<Graph>& corpus) {
  // Distances are checked inside the reducer; a rise throws InternalError,
  // which aborts this run.
  const auto paper = reduce_sweep(corpus, std::nullopt, nullptr);
  verdict("C6", paper.underflow == 0 && paper.defects == 0 && paper.bad == 0,
          "reduce_to_n with the fifth-root selection, n<=10: " + tally(paper));
  for (int size = 2; size <= 12; ++size) {
    const auto t = reduce_sweep(corpus, size, nullptr);
    note("selection override " + std::to_string(size) + ": " + tally(t));
  }
  std::vector<Graph> twelve;
  for (Graph& g : enumerate_cubic(12)) {
    if (classify_connectivity(g).is_biconnected_paper) twelve.push_back(std::move(g));
  }
  for (int size = 4; size <= 12; ++size) {
    const auto t = reduce_sweep(twelve, size, nullptr);
    note("n=12 selection override " + std::to_string(size) + ": " + tally(t));
  }
}

void criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream ev;
  for (int n : {10, 12}) {
    const auto row = conjecture_probe(n, kJobs);
    ok &= row.injection_possible == (row.lhs_count <= row.rhs_count);
    if (n == 10) {
      int bridge10 = 0;
      for (const Graph& g : enumerate_cubic(10)) bridge10 += !oracle::bridges(g).empty();
      ok &= row.rhs_count == 1 && bridge10 == 1;
    }
    ev << " n=" << n << ": lhs=" << row.lhs_count << " rhs=" << row.rhs_count
       << " injection_possible=" << (row.injection_possible ? "true" : "false") << ";";
  }
  const double t = seconds_since(t0);
  ok &= t < kC7Seconds;
  verdict("C7", ok, "probe rows" + ev.str() + " in " + secs(t) + " (limit " + secs(kC7Seconds) + ")");
}

std::map<std::string, std::string> acceptance_jobs(const std::vector<Graph>& corpus) {
  std::map<std::string, std::string> out;
  const auto rows = census_table(4, 14, CensusOptions{.jobs = kJobs});
  out["census.csv"] = census_csv(rows);
  out["census.json"] = census_json(rows);
  std::vector<ConjectureProbeRow> probe{conjecture_probe(10, kJobs), conjecture_probe(12, kJobs)};
  out["probe.csv"] = probe_csv(probe);
  out["probe.json"] = probe_json(probe);
  out["lemmas.json"] = lemma_report_json(verify_lemmas(corpus, OrbitMode::kRootStabilizer, kJobs));
  out["family_stats_10.json"] = family_stats_json(family_size_stats(10, OrbitMode::kFullGroup, kJobs));
  json::Json runs = json::Json::array();
  reduce_sweep(corpus, 8, &runs);
  out["reduce_override_8.json"] = runs.dump(2) + "\n";
  std::string enumerated;
  for (const Graph& g : enumerate_cubic(12)) enumerated += to_graph6(g) + "\n";
  out["enumerate_12.g6"] = enumerated;
  return out;
}

void criterion8(const std::vector<Graph>& corpus, const fs::path& dir) {
  const auto first = acceptance_jobs(corpus);
  const auto second = acceptance_jobs(corpus);
  fs::create_directories(dir / "run1");
  fs::create_directories(dir / "run2");
  int differ = 0;
  for (const auto& [name, text] : first) {
    std::ofstream(dir / "run1" / name, std::ios::binary) << text;
    std::ofstream(dir / "run2" / name, std::ios::binary) << second.at(name);
  }
  for (const auto& [name, text] : first) {
    auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      return std::string(std::istreambuf_iterator<char>(in), {});
    };
    if (slurp(dir / "run1" / name) != slurp(dir / "run2" / name)) {
      ++differ;
      note("differs: " + name);
    }
  }
  verdict("C8", differ == 0,
          "two runs of " + std::to_string(first.size()) + " jobs, byte-identical files in " +
              (dir / "run1").string() + " and run2: " + std::to_string(first.size() - differ) + "/" +
              std::to_string(first.size()));
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? argv[1] : "acceptance_artifacts";
  try {
    const auto corpus = biconnected_corpus();
    criterion1();
    criterion2();
    criterion3(corpus);
    criterion4(corpus);
    criterion5(corpus);
    criterion6(corpus);
    criterion7();
    criterion8(corpus, dir);
  } catch (const std::exception& e) {
    std::cout << "aborted: " << e.what() << std::endl;
    return 2;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
