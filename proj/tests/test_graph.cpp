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

#include <doctest.h>

#include <string>

#include "cubiclab/error.hpp"
#include "cubiclab/graph.hpp"
#include "oracles.hpp"

using namespace cubiclab;

namespace {

// Reference graph6 writer, straight from the format description.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

}  // namespace

TEST_CASE("build_graph basics") {
  const Graph empty = build_graph(0, std::initializer_list<std::pair<Vertex, Vertex>>{});
  CHECK(empty.order() == 0);
  CHECK(empty.size() == 0);

  const Graph k4 = oracle::k4();
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  const Graph d8 = oracle::d8();
  CHECK(d8.size() == 12);
  for (Vertex v = 0; v < 8; ++v) CHECK(d8.degree(v) == 3);
}

TEST_CASE("build_graph rejects bad pairs and merges repeats") {
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(build_graph(3, {{-1, 1}}), PreconditionError);
  try {
    build_graph(3, {{2, 2}});
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  const Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);
  CHECK(g.adjacent(1, 0));
}

TEST_CASE("adjacency is sorted and symmetric") {
  oracle::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + rng.below(15), 0.4);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
      for (Vertex w : nb) {
        CHECK(w != v);
        CHECK(g.adjacent(w, v));
      }
    }
  }
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(oracle::k4()) == "C~");
  CHECK(to_graph6(build_graph(0, std::initializer_list<std::pair<Vertex, Vertex>>{})) == "?");
  CHECK(to_graph6(oracle::d8()) == reference_graph6(oracle::d8()));
  CHECK(parse_graph6(to_graph6(oracle::d8())) == oracle::d8());
  CHECK(parse_graph6("C~\n") == oracle::k4());
}

TEST_CASE("graph6 long header") {
  oracle::Rng rng(11);
  for (int n : {62, 63, 64, 100}) {
    const Graph g = oracle::random_graph(rng, n, 0.1);
    const auto text = to_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK(parse_graph6(text) == g);
  }
  CHECK(to_graph6(oracle::random_graph(rng, 63, 0.0)).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 parse errors carry offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  try {
    parse_graph6("C~~");
    FAIL("trailing garbage accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("C}");  // 4 vertices need 6 bits: 62 = 111110, the last bit must match... valid
  } catch (const ParseError&) {
    FAIL("valid input rejected");
  }
  try {
    parse_graph6("Bw");  // 3 vertices, 3 bits used; 'w'-63 = 56 = 111000 is fine
  } catch (const ParseError&) {
    FAIL("valid input rejected");
  }
  try {
    parse_graph6("Bx");  // 57 = 111001: padding bit set
    FAIL("nonzero padding accepted");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);        // truncated data
  CHECK_THROWS_AS(parse_graph6("~?"), ParseError);       // truncated header
  CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);    // byte out of range
}

TEST_CASE("property: graph6 round trip on 1000 random graphs") {
  oracle::Rng rng(20260101);
  for (int i = 0; i < 1000; ++i) {
    const int n = rng.below(21);
    const double density = (rng.below(100) + 1) / 100.0;
    const Graph g = oracle::random_graph(rng, n, density);
    const auto text = to_graph6(g);
    REQUIRE(text == reference_graph6(g));
    REQUIRE(parse_graph6(text) == g);
  }
}

TEST_CASE("edge-list text and corpora") {
  const Graph d8 = oracle::d8();
  const auto text = to_edge_list(d8);
  CHECK(text.substr(0, 5) == "8 12\n");
  CHECK(parse_edge_list(text) == d8);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), PreconditionError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), PreconditionError);

  const auto corpus = parse_corpus("C~\nG`iiac\n\n");
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0] == oracle::k4());
  const auto blocks = parse_corpus(to_edge_list(oracle::k4()) + to_edge_list(d8));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[1] == d8);
}

TEST_CASE("induced_subgraph") {
  const auto tri = induced_subgraph(oracle::k4(), std::vector<Vertex>{0, 1, 2});
  CHECK(tri.graph.order() == 3);
  CHECK(tri.graph.size() == 3);

  const auto dia = induced_subgraph(oracle::d8(), std::vector<Vertex>{0, 1, 2, 3});
  CHECK(dia.graph.size() == 5);
  std::vector<int> degrees;
  for (Vertex v = 0; v < 4; ++v) degrees.push_back(dia.graph.degree(v));
  CHECK(degrees == std::vector<int>{2, 3, 3, 2});

  const auto none = induced_subgraph(oracle::d8(), std::vector<Vertex>{});
  CHECK(none.graph.order() == 0);

  const auto mapped = induced_subgraph(oracle::d8(), std::vector<Vertex>{7, 3, 5});
  CHECK(mapped.to_old == std::vector<Vertex>{3, 5, 7});
  CHECK(mapped.to_new[5] == 1);
  CHECK(mapped.to_new[0] == -1);
  CHECK_THROWS_AS(induced_subgraph(oracle::d8(), std::vector<Vertex>{8}), PreconditionError);
}

TEST_CASE("bfs_distances") {
  const auto k4 = bfs_distances(oracle::k4(), 0);
  CHECK(k4.dist == std::vector<int>{0, 1, 1, 1});
  CHECK(k4.d_max == 1);
  const auto p = bfs_distances(oracle::path(3), 0);
  CHECK(p.dist == std::vector<int>{0, 1, 2});
  CHECK(p.d_max == 2);
  CHECK_THROWS_AS(bfs_distances(oracle::path(3), 3), PreconditionError);

  const auto region = bfs_distances(oracle::path(5), 1, std::vector<Vertex>{0, 1, 2});
  CHECK(region.dist == std::vector<int>{1, 0, 1, kUnreachable, kUnreachable});
}

TEST_CASE("property: bfs neighbor layers and agreement with Floyd-Warshall") {
  oracle::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + rng.below(16), 0.25);
    const auto all = oracle::all_pairs_distances(g);
    const Vertex root = rng.below(g.order());
    const auto prof = bfs_distances(g, root);
    int d_max = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(prof.dist[v] == all[root][v]);
      d_max = std::max(d_max, prof.dist[v]);
    }
    CHECK(prof.d_max == d_max);
    for (const Edge& e : g.edges()) {
      if (prof.dist[e.u] >= 0) CHECK(std::abs(prof.dist[e.u] - prof.dist[e.v]) <= 1);
    }
  }
}

TEST_CASE("basic_predicates") {
  const auto k4 = basic_predicates(oracle::k4());
  CHECK(k4.is_cubic);
  CHECK(k4.is_connected);
  const auto pet = basic_predicates(oracle::petersen());
  CHECK(pet.is_cubic);
  CHECK(pet.is_connected);
  const auto p = basic_predicates(oracle::path(3));
  CHECK_FALSE(p.is_cubic);
  CHECK(p.degree_sequence == std::vector<int>{2, 1, 1});
  CHECK(components(build_graph(4, {{0, 1}, {2, 3}})).size() == 2);
}

TEST_CASE("GraphEditor compacts removed vertices") {
  GraphEditor ed(oracle::path(4));
  ed.remove_vertex(1);
  const Vertex x = ed.add_vertex();
  ed.add_edge(0, x);
  ed.add_edge(2, x);
  CHECK_THROWS_AS(ed.add_edge(0, x), PreconditionError);
  CHECK_THROWS_AS(ed.add_edge(x, x), PreconditionError);
  const auto res = ed.finish();
  CHECK(res.remap == std::vector<Vertex>{0, -1, 1, 2, 3});
  CHECK(res.graph == build_graph(4, {{0, 3}, {1, 3}, {1, 2}}));
}
