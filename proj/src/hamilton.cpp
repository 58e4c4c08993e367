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

#include "cubiclab/hamilton.hpp"

#include <algorithm>

#include "cubiclab/connectivity.hpp"
#include "cubiclab/error.hpp"

namespace cubiclab {
namespace {

class PathSearch {
 public:
  explicit PathSearch(const Graph& g) : g_(g), n_(g.order()), on_path_(n_, false) {}

  std::optional<std::vector<Vertex>> run() {
    path_.push_back(0);
    on_path_[0] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  // Every vertex still to be visited needs two usable incident edges: to
  // unvisited vertices or to one of the open path ends.
  bool feasible() const {
    const Vertex head = path_.front();
    const Vertex tail = path_.back();
    for (Vertex v = 0; v < n_; ++v) {
      if (on_path_[v]) continue;
      int usable = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (!on_path_[w] || w == head || w == tail) ++usable;
      }
      if (usable < 2) return false;
    }
    return true;
  }

  bool extend() {
    const Vertex tail = path_.back();
    if (static_cast<int>(path_.size()) == n_) return g_.adjacent(tail, path_.front());
    for (Vertex w : g_.neighbors(tail)) {
      if (on_path_[w]) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (feasible() && extend()) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const int n_;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
};

}  // namespace

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::kCycleFound: return "cycle-found";
    case Certificate::kExhausted: return "exhausted";
    case Certificate::kBridgeShortcut: return "bridge-shortcut";
  }
  return "?";
}

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (static_cast<int>(cycle.size()) != g.order() || cycle.size() < 3) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : cycle) {
    if (!g.has_vertex(v) || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

HamiltonicityResult has_hamiltonian_cycle(const Graph& g, HamiltonOptions options) {
  CUBICLAB_REQUIRE(g.order() >= 3, "has_hamiltonian_cycle: need at least 3 vertices");
  CUBICLAB_REQUIRE(is_connected(g), "has_hamiltonian_cycle: graph is disconnected");
  HamiltonicityResult r;
  if (options.use_bridge_shortcut && !find_bridges(g).empty()) {
    r.certificate = Certificate::kBridgeShortcut;
    return r;
  }
  auto cycle = PathSearch(g).run();
  if (cycle) {
    CUBICLAB_CHECK(is_hamiltonian_cycle(g, *cycle), "solver returned an invalid witness");
    r.is_hamiltonian = true;
    r.witness = std::move(cycle);
    r.certificate = Certificate::kCycleFound;
  }
  return r;
}

}  // namespace cubiclab
