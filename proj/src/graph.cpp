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

#include "cubiclab/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cubiclab/error.hpp"

namespace cubiclab {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  CUBICLAB_REQUIRE(n >= 0, "negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw PreconditionError("vertex id out of range in pair " + to_string(e) +
                              " for n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw PreconditionError("self-loop " + to_string(e));
    }
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  int twice = 0;
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    twice += static_cast<int>(a.size());
  }
  g.edge_count_ = twice / 2;
  return g;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.push_back({a, b});  // orientation kept for diagnostics
  return build_graph(n, std::span<const Edge>(es));
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

// ---------------------------------------------------------------------------
// GraphEditor

GraphEditor::GraphEditor(const Graph& g) : adj_(g.adj_), alive_(g.order(), true) {}

void GraphEditor::check_live(Vertex v, const char* what) const {
  if (v < 0 || v >= capacity() || !alive_[v]) {
    throw PreconditionError(std::string(what) + ": no live vertex " + std::to_string(v));
  }
}

Vertex GraphEditor::add_vertex() {
  adj_.emplace_back();
  alive_.push_back(true);
  return capacity() - 1;
}

bool GraphEditor::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || u >= capacity() || v < 0 || v >= capacity()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void GraphEditor::add_edge(Vertex u, Vertex v) {
  check_live(u, "add_edge");
  check_live(v, "add_edge");
  if (u == v) throw PreconditionError("add_edge: self-loop at " + std::to_string(u));
  if (adjacent(u, v)) {
    throw PreconditionError("add_edge: duplicate edge " + to_string(Edge::of(u, v)));
  }
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

void GraphEditor::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) {
    throw PreconditionError("remove_edge: no edge " + to_string(Edge::of(u, v)));
  }
  adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
}

void GraphEditor::remove_vertex(Vertex v) {
  check_live(v, "remove_vertex");
  for (Vertex w : std::vector<Vertex>(adj_[v])) remove_edge(v, w);
  alive_[v] = false;
}

GraphEditor::Result GraphEditor::finish() const {
  Result r;
  r.remap.assign(capacity(), -1);
  int next = 0;
  for (Vertex v = 0; v < capacity(); ++v) {
    if (alive_[v]) r.remap[v] = next++;
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < capacity(); ++v) {
    if (!alive_[v]) continue;
    for (Vertex w : adj_[v]) {
      if (v < w) edges.push_back(Edge::of(r.remap[v], r.remap[w]));
    }
  }
  r.graph = build_graph(next, std::span<const Edge>(edges));
  return r;
}

// ---------------------------------------------------------------------------
// Edge-list text

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace {

// Splits on '\n', dropping a trailing '\r' on each line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::istringstream is{std::string(line)};
  long long x;
  while (is >> x) out.push_back(x);
  if (!is.eof()) {
    throw PreconditionError("edge list: non-integer token on line " +
                            std::to_string(line_no + 1));
  }
  return out;
}

// Parses one edge-list block starting at lines[pos]; advances pos.
Graph parse_edge_list_block(const std::vector<std::string_view>& lines, std::size_t& pos) {
  while (pos < lines.size() && blank(lines[pos])) ++pos;
  CUBICLAB_REQUIRE(pos < lines.size(), "edge list: missing header line");
  auto header = parse_ints(lines[pos], pos);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw PreconditionError("edge list: header must be \"n m\" on line " +
                            std::to_string(pos + 1));
  }
  const int n = static_cast<int>(header[0]);
  const long long m = header[1];
  ++pos;
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i, ++pos) {
    if (pos >= lines.size()) {
      throw PreconditionError("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
    }
    auto uv = parse_ints(lines[pos], pos);
    if (uv.size() != 2) {
      throw PreconditionError("edge list: expected \"u v\" on line " + std::to_string(pos + 1));
    }
    edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
  }
  Graph g = build_graph(n, std::span<const Edge>(edges));
  if (g.size() != m) {
    throw PreconditionError("edge list: repeated edge in block ending on line " +
                            std::to_string(pos));
  }
  return g;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t pos = 0;
  Graph g = parse_edge_list_block(lines, pos);
  for (; pos < lines.size(); ++pos) {
    if (!blank(lines[pos])) {
      throw PreconditionError("edge list: trailing content on line " + std::to_string(pos + 1));
    }
  }
  return g;
}

std::vector<Graph> parse_corpus(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Graph> out;
  std::size_t first = 0;
  while (first < lines.size() && blank(lines[first])) ++first;
  if (first == lines.size()) return out;
  const bool edge_list = lines[first].find_first_of(" \t") != std::string_view::npos;
  if (edge_list) {
    std::size_t pos = first;
    while (true) {
      while (pos < lines.size() && blank(lines[pos])) ++pos;
      if (pos >= lines.size()) break;
      out.push_back(parse_edge_list_block(lines, pos));
    }
    return out;
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      out.push_back(parse_graph6(lines[i]));
    } catch (const ParseError& e) {
      throw PreconditionError("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgraphs, traversal, predicates

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  InducedSubgraph r;
  r.to_new.assign(g.order(), -1);
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (!g.has_vertex(v)) {
      throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) r.to_new[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex v : sorted) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && r.to_new[w] >= 0) edges.push_back({r.to_new[v], r.to_new[w]});
    }
  }
  r.graph = build_graph(static_cast<int>(sorted.size()), std::span<const Edge>(edges));
  r.to_old = std::move(sorted);
  return r;
}

namespace {

DistanceProfile bfs_impl(const Graph& g, Vertex root, const std::vector<bool>* allowed) {
  if (!g.has_vertex(root)) {
    throw PreconditionError("bfs: root " + std::to_string(root) + " out of range");
  }
  if (allowed && !(*allowed)[root]) {
    throw PreconditionError("bfs: root " + std::to_string(root) + " outside the region");
  }
  DistanceProfile p;
  p.root = root;
  p.dist.assign(g.order(), kUnreachable);
  p.dist[root] = 0;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    p.d_max = std::max(p.d_max, p.dist[v]);
    for (Vertex w : g.neighbors(v)) {
      if (p.dist[w] != kUnreachable) continue;
      if (allowed && !(*allowed)[w]) continue;
      p.dist[w] = p.dist[v] + 1;
      queue.push_back(w);
    }
  }
  return p;
}

}  // namespace

DistanceProfile bfs_distances(const Graph& g, Vertex root) { return bfs_impl(g, root, nullptr); }

DistanceProfile bfs_distances(const Graph& g, Vertex root, std::span<const Vertex> region) {
  std::vector<bool> allowed(g.order(), false);
  for (Vertex v : region) {
    if (!g.has_vertex(v)) {
      throw PreconditionError("bfs: region vertex " + std::to_string(v) + " out of range");
    }
    allowed[v] = true;
  }
  return bfs_impl(g, root, &allowed);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

BasicFacts basic_predicates(const Graph& g) {
  BasicFacts f;
  f.is_cubic = is_cubic(g);
  f.is_connected = is_connected(g);
  for (Vertex v = 0; v < g.order(); ++v) f.degree_sequence.push_back(g.degree(v));
  std::sort(f.degree_sequence.rbegin(), f.degree_sequence.rend());
  return f;
}

}  // namespace cubiclab
