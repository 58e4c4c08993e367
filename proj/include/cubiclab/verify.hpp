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

#pragma once

#include <string>
#include <vector>

#include "cubiclab/construction.hpp"
#include "cubiclab/graph.hpp"
#include "cubiclab/symmetry.hpp"

namespace cubiclab {

// Construction-level checks on one input graph.
struct LemmaCheck {
  std::string graph6;
  int n = 0;
  bool applicable = false;      // connected, cubic, biconnected (paper sense)
  std::string skipped_reason;

  bool construction_ok = false;  // n+4 vertices, one bridge, two degree-2 vertices
  bool side_bridgeless = false;
  DistanceBoundReport bound;
  int family_size = 0;
  int ineligible_orbits = 0;
  bool members_ok = false;       // every member connected, cubic, bridge, n+4
  bool members_noniso = false;
  bool family_covers_d_max = false;  // family_size >= d_max (a finding when false)
  std::vector<std::string> diagnostics;

  // Hard failures only: construction shape, bridgeless side, the distance
  // bound under the root stabilizer, member validity, member collisions.
  bool passed() const;
};

LemmaCheck verify_lemmas_one(const Graph& g, OrbitMode family_mode = OrbitMode::kFullGroup);

struct LemmaSummary {
  int graphs = 0;
  int applicable = 0;
  int construction_failures = 0;
  int side_bridgeless_failures = 0;
  int bound_stabilizer_failures = 0;
  int bound_full_group_findings = 0;   // full-group count below d_max
  int member_failures = 0;
  int collision_failures = 0;
  int family_below_d_max_findings = 0;
  int errors = 0;                      // checks that threw
  bool passed() const;
};

struct LemmaReport {
  LemmaSummary summary;
  std::vector<LemmaCheck> checks;
};

LemmaReport verify_lemmas(const std::vector<Graph>& corpus, OrbitMode family_mode = OrbitMode::kFullGroup,
                          int jobs = 1);
std::string lemma_report_json(const LemmaReport& report);

}  // namespace cubiclab
