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

#include "cubiclab/cubiclab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "cubiclab/census.hpp"
#include "cubiclab/construction.hpp"
#include "cubiclab/error.hpp"
#include "cubiclab/graph.hpp"
#include "cubiclab/reduction.hpp"
#include "cubiclab/symmetry.hpp"
#include "cubiclab/verify.hpp"
#include "serialize.hpp"

struct cl_graph {
  cubiclab::Graph g;
};

namespace {

using namespace cubiclab;

thread_local std::string last_error;

template <typename F>
cl_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return CL_OK;
  } catch (const PreconditionError& e) {
    last_error = e.what();
    return CL_PRECONDITION;
  } catch (const InternalError& e) {
    last_error = e.what();
    return CL_INTERNAL;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CL_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CL_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return CL_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw PreconditionError(std::string(what) + " must not be NULL");
}

OrbitMode to_mode(cl_orbit_mode m) {
  switch (m) {
    case CL_ORBIT_FULL: return OrbitMode::kFullGroup;
    case CL_ORBIT_STABILIZER: return OrbitMode::kRootStabilizer;
  }
  throw PreconditionError("unknown orbit mode " + std::to_string(static_cast<int>(m)));
}

void check_format(cl_format f) {
  if (f != CL_FORMAT_CSV && f != CL_FORMAT_JSON) {
    throw PreconditionError("unknown output format " + std::to_string(static_cast<int>(f)));
  }
}

cl_graph* wrap(Graph g) { return new cl_graph{std::move(g)}; }

std::string lines(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    out += s;
    out += '\n';
  }
  return out;
}

}  // namespace

extern "C" {

const char* cl_last_error(void) { return last_error.c_str(); }

const char* cl_version(void) { return "1.0.0"; }

void cl_string_free(char* s) { std::free(s); }

cl_status cl_graph_from_graph6(const char* text, cl_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(parse_graph6(text));
  });
}

cl_status cl_graph_from_edge_list(const char* text, cl_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(parse_edge_list(text));
  });
}

cl_status cl_graph_from_edges(int n, const int* pairs, size_t edge_count, cl_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (edge_count > 0) need(pairs, "pairs");
    if (n < 0) throw PreconditionError("vertex count must be non-negative");
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.push_back(Edge::of(pairs[2 * i], pairs[2 * i + 1]));
    *out = wrap(build_graph(n, edges));
  });
}

void cl_graph_free(cl_graph* g) { delete g; }

int cl_graph_order(const cl_graph* g) { return g == nullptr ? -1 : g->g.order(); }

int cl_graph_size(const cl_graph* g) { return g == nullptr ? -1 : g->g.size(); }

cl_status cl_graph_to_graph6(const cl_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(to_graph6(g->g));
  });
}

cl_status cl_graph_to_edge_list(const cl_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(to_edge_list(g->g));
  });
}

cl_status cl_graph_canonical_graph6(const cl_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(canonical_form(g->g).graph6);
  });
}

cl_status cl_parse_corpus(const char* text, cl_graph*** out, size_t* count) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    need(count, "count");
    auto graphs = parse_corpus(text);
    auto arr = std::make_unique<cl_graph*[]>(graphs.size() + 1);
    for (size_t i = 0; i < graphs.size(); ++i) arr[i] = wrap(std::move(graphs[i]));
    *count = graphs.size();
    *out = arr.release();
  });
}

void cl_graph_array_free(cl_graph** graphs, size_t count) {
  if (graphs == nullptr) return;
  for (size_t i = 0; i < count; ++i) delete graphs[i];
  delete[] graphs;
}

cl_status cl_classify_json(const cl_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(json::classify(g->g).dump(2) + "\n");
  });
}

cl_status cl_construct_json(const cl_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(json::record(bridge_construct(g->g)).dump(2) + "\n");
  });
}

cl_status cl_insert(const cl_graph* g, cl_orbit_mode mode, char** graph6_lines, char** report_json) {
  return guarded([&] {
    need(g, "graph");
    const auto fam = insertion_family(bridge_construct(g->g), to_mode(mode));
    std::string text;
    std::string report;
    if (graph6_lines != nullptr) {
      std::vector<std::string> codes;
      for (const auto& m : fam.members) codes.push_back(to_graph6(m.graph));
      text = lines(codes);
    }
    if (report_json != nullptr) report = json::family(fam).dump(2) + "\n";
    if (graph6_lines != nullptr) *graph6_lines = dup_string(text);
    if (report_json != nullptr) *report_json = dup_string(report);
  });
}

cl_status cl_reduce_json(const cl_graph* g, int edge_u, int edge_v, cl_orbit_mode mode,
                         int region_size, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const OrbitMode m = to_mode(mode);
    const auto rec = bridge_construct(g->g);
    ReduceOptions options;
    options.mode = m;
    if (region_size > 0) options.region.size_override = region_size;

    json::Json runs = json::Json::array();
    if (edge_u >= 0) {
      runs.push_back(json::outcome(reduce_to_n(rec, Edge::of(edge_u, edge_v), options)));
    } else {
      for (const auto& member : insertion_family(rec, m).members) {
        try {
          runs.push_back(json::outcome(reduce_to_n(rec, member.edge, options)));
        } catch (const RegionUnderflowError& e) {
          runs.push_back({{"inserted", json::edge(member.edge)}, {"underflow", e.what()}});
        } catch (const InternalError&) {
          throw;
        } catch (const PreconditionError& e) {
          runs.push_back({{"inserted", json::edge(member.edge)}, {"error", e.what()}});
        }
      }
    }
    json::Json doc;
    doc["source"] = json::graph(g->g);
    doc["mode"] = to_string(m);
    doc["region_size"] = region_size > 0 ? json::Json(region_size) : json::Json(nullptr);
    doc["runs"] = std::move(runs);
    *out = dup_string(doc.dump(2) + "\n");
  });
}

cl_status cl_enumerate(int n, char** out) {
  return guarded([&] {
    need(out, "out");
    std::vector<std::string> codes;
    for (const auto& g : enumerate_cubic(n)) codes.push_back(to_graph6(g));
    *out = dup_string(lines(codes));
  });
}

int cl_enumeration_max_n(void) {
  int value = -1;
  guarded([&] { value = enumeration_max_n(); });
  return value;
}

cl_status cl_census(int n_min, int n_max, int jobs, cl_format format, char** out) {
  return guarded([&] {
    need(out, "out");
    check_format(format);
    const auto rows = census_table(n_min, n_max, CensusOptions{.jobs = jobs});
    *out = dup_string(format == CL_FORMAT_CSV ? census_csv(rows) : census_json(rows));
  });
}

cl_status cl_probe(int n_min, int n_max, int jobs, cl_format format, char** out) {
  return guarded([&] {
    need(out, "out");
    check_format(format);
    if (n_min > n_max || n_min % 2 != 0 || n_max % 2 != 0) {
      throw PreconditionError("probe: bounds must be even with n-min <= n-max");
    }
    std::vector<ConjectureProbeRow> rows;
    for (int n = n_min; n <= n_max; n += 2) rows.push_back(conjecture_probe(n, jobs));
    *out = dup_string(format == CL_FORMAT_CSV ? probe_csv(rows) : probe_json(rows));
  });
}

cl_status cl_family_stats_json(int n, cl_orbit_mode mode, int jobs, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup_string(family_stats_json(family_size_stats(n, to_mode(mode), jobs)));
  });
}

cl_status cl_verify_lemmas_json(const cl_graph* const* graphs, size_t count, cl_orbit_mode mode,
                                int jobs, char** out, int* passed) {
  return guarded([&] {
    need(out, "out");
    if (count > 0) need(graphs, "graphs");
    std::vector<Graph> corpus;
    corpus.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      need(graphs[i], "graph");
      corpus.push_back(graphs[i]->g);
    }
    const auto report = verify_lemmas(corpus, to_mode(mode), jobs);
    if (passed != nullptr) *passed = report.summary.passed() ? 1 : 0;
    *out = dup_string(lemma_report_json(report));
  });
}

}  // extern "C"
