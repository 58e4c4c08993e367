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

#include <optional>
#include <span>
#include <vector>

#include "cubiclab/graph.hpp"

namespace cubiclab {

enum class Certificate { kCycleFound, kExhausted, kBridgeShortcut };

const char* to_string(Certificate c);

struct HamiltonicityResult {
  bool is_hamiltonian = false;
  std::optional<std::vector<Vertex>> witness;  // cycle order starting at 0
  Certificate certificate = Certificate::kExhausted;
};

struct HamiltonOptions {
  // A graph with a bridge has no Hamiltonian cycle; answer immediately.
  bool use_bridge_shortcut = true;
};

// Exact decision by backtracking from vertex 0. Requires a connected graph
// with at least 3 vertices.
HamiltonicityResult has_hamiltonian_cycle(const Graph& g, HamiltonOptions options = {});

// Independent check that `cycle` visits every vertex once along edges of g.
bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle);

}  // namespace cubiclab
