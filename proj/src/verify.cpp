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

#include "cubiclab/verify.hpp"

#include <algorithm>
#include <exception>

#include "cubiclab/connectivity.hpp"
#include "cubiclab/error.hpp"
#include "parallel.hpp"
#include "serialize.hpp"

namespace cubiclab {

bool LemmaCheck::passed() const {
  if (!applicable) return true;
  return construction_ok && side_bridgeless && bound.holds_stabilizer && members_ok &&
         members_noniso;
}

bool LemmaSummary::passed() const {
  return construction_failures == 0 && side_bridgeless_failures == 0 &&
         bound_stabilizer_failures == 0 && member_failures == 0 && collision_failures == 0 &&
         errors == 0;
}

LemmaCheck verify_lemmas_one(const Graph& g, OrbitMode family_mode) {
  LemmaCheck c;
  c.graph6 = to_graph6(g);
  c.n = g.order();
  if (!is_connected(g) || !is_cubic(g)) {
    c.skipped_reason = "not a connected cubic graph";
    return c;
  }
  if (!classify_connectivity(g).is_biconnected_paper) {
    c.skipped_reason = "not biconnected";
    return c;
  }
  c.applicable = true;
  try {
    const auto rec = bridge_construct(g);
    const Graph& gp = rec.g_prime;
    int deg2 = 0;
    for (Vertex v = 0; v < gp.order(); ++v) deg2 += gp.degree(v) == 2 ? 1 : 0;
    const auto bridges = find_bridges(gp);
    c.construction_ok = gp.order() == g.order() + 4 && bridges.size() == 1 && deg2 == 2;
    if (!c.construction_ok) c.diagnostics.push_back("construction shape violated");

    c.side_bridgeless = check_side_bridgeless(rec);
    if (!c.side_bridgeless) c.diagnostics.push_back("selected side has a bridge");

    c.bound = check_distance_bound(rec);
    if (!c.bound.holds_stabilizer) {
      c.diagnostics.push_back("stabilizer edge orbits " + std::to_string(c.bound.distinct_stabilizer) +
                              " < d_max " + std::to_string(c.bound.d_max));
    }
    if (!c.bound.holds_full_group) {
      c.diagnostics.push_back("finding: full-group edge orbits " +
                              std::to_string(c.bound.distinct_full_group) + " < d_max " +
                              std::to_string(c.bound.d_max));
    }

    const auto fam = insertion_family(rec, family_mode);
    c.family_size = static_cast<int>(fam.members.size());
    c.ineligible_orbits = static_cast<int>(fam.ineligible_orbits.size());
    c.members_ok = std::all_of(fam.members.begin(), fam.members.end(), [&](const FamilyMember& m) {
      return m.graph.order() == g.order() + 4 && is_connected(m.graph) && is_cubic(m.graph) &&
             !find_bridges(m.graph).empty();
    });
    if (!c.members_ok) c.diagnostics.push_back("a family member is not a cubic bridge graph on n+4");
    c.members_noniso = fam.pairwise_noniso;
    if (!c.members_noniso) {
      c.diagnostics.push_back(std::to_string(fam.collisions.size()) + " isomorphic member pairs");
    }
    c.family_covers_d_max = c.family_size >= rec.profile.d_max;
    if (!c.family_covers_d_max) {
      c.diagnostics.push_back("finding: family size " + std::to_string(c.family_size) + " < d_max " +
                              std::to_string(rec.profile.d_max) + " (" +
                              std::to_string(c.ineligible_orbits) +
                              " cycle-edge orbits touch the degree-2 nodes only)");
    }
  } catch (const std::exception& e) {
    c.diagnostics.push_back(std::string("error: ") + e.what());
    c.construction_ok = false;
  }
  return c;
}

LemmaReport verify_lemmas(const std::vector<Graph>& corpus, OrbitMode family_mode, int jobs) {
  LemmaReport report;
  report.checks = detail::parallel_map(corpus.size(), jobs, [&](std::size_t i) {
    return verify_lemmas_one(corpus[i], family_mode);
  });
  auto& s = report.summary;
  for (const auto& c : report.checks) {
    ++s.graphs;
    if (!c.applicable) continue;
    ++s.applicable;
    const bool threw = std::any_of(c.diagnostics.begin(), c.diagnostics.end(),
                                   [](const std::string& d) { return d.starts_with("error: "); });
    if (threw) {
      ++s.errors;
      continue;
    }
    s.construction_failures += c.construction_ok ? 0 : 1;
    s.side_bridgeless_failures += c.side_bridgeless ? 0 : 1;
    s.bound_stabilizer_failures += c.bound.holds_stabilizer ? 0 : 1;
    s.bound_full_group_findings += c.bound.holds_full_group ? 0 : 1;
    s.member_failures += c.members_ok ? 0 : 1;
    s.collision_failures += c.members_noniso ? 0 : 1;
    s.family_below_d_max_findings += c.family_covers_d_max ? 0 : 1;
  }
  return report;
}

std::string lemma_report_json(const LemmaReport& report) {
  using json::Json;
  const auto& s = report.summary;
  Json j;
  Json sj;
  sj["passed"] = s.passed();
  sj["graphs"] = s.graphs;
  sj["applicable"] = s.applicable;
  sj["construction_failures"] = s.construction_failures;
  sj["side_bridgeless_failures"] = s.side_bridgeless_failures;
  sj["bound_stabilizer_failures"] = s.bound_stabilizer_failures;
  sj["bound_full_group_findings"] = s.bound_full_group_findings;
  sj["member_failures"] = s.member_failures;
  sj["collision_failures"] = s.collision_failures;
  sj["family_below_d_max_findings"] = s.family_below_d_max_findings;
  sj["errors"] = s.errors;
  j["summary"] = std::move(sj);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json cj;
    cj["graph6"] = c.graph6;
    cj["n"] = c.n;
    cj["applicable"] = c.applicable;
    if (!c.applicable) {
      cj["skipped_reason"] = c.skipped_reason;
      checks.push_back(std::move(cj));
      continue;
    }
    cj["passed"] = c.passed();
    cj["construction_ok"] = c.construction_ok;
    cj["side_bridgeless"] = c.side_bridgeless;
    cj["distance_bound"] = json::distance_bound(c.bound);
    cj["family_size"] = c.family_size;
    cj["ineligible_orbits"] = c.ineligible_orbits;
    cj["members_ok"] = c.members_ok;
    cj["members_noniso"] = c.members_noniso;
    cj["family_covers_d_max"] = c.family_covers_d_max;
    cj["diagnostics"] = c.diagnostics;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace cubiclab
