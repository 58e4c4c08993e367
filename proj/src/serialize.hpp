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

#include <json.hpp>

#include "cubiclab/census.hpp"
#include "cubiclab/connectivity.hpp"
#include "cubiclab/construction.hpp"
#include "cubiclab/graph.hpp"
#include "cubiclab/hamilton.hpp"
#include "cubiclab/reduction.hpp"

namespace cubiclab::json {

using Json = nlohmann::ordered_json;

Json edge(const Edge& e);
Json vertices(std::span<const Vertex> vs);
Json graph(const Graph& g);
Json bibridge(const BiBridge& bb);
Json profile(const DistanceProfile& p);
Json classify(const Graph& g);
Json record(const ConstructionRecord& rec);
Json family(const InsertionFamily& fam);
Json distance_bound(const DistanceBoundReport& r);
Json complete_tree(const CompleteTreeReport& r);
Json outcome(const ReduceOutcome& o);
Json tree_match(const CompleteTreeMatch& m);

}  // namespace cubiclab::json
