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

/* C interface to the cubic graph library. Every function returning
 * cl_status leaves a message for cl_last_error() when it fails. Strings
 * handed out through char** are owned by the caller and released with
 * cl_string_free. */
#ifndef CUBICLAB_CUBICLAB_H_
#define CUBICLAB_CUBICLAB_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CUBICLAB_BUILDING)
#    define CL_API __declspec(dllexport)
#  else
#    define CL_API __declspec(dllimport)
#  endif
#else
#  define CL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_PRECONDITION = 1, /* bad input: parse error, wrong graph class, bad flag */
  CL_INTERNAL = 2      /* an internal invariant failed */
} cl_status;

typedef enum cl_orbit_mode { CL_ORBIT_FULL = 0, CL_ORBIT_STABILIZER = 1 } cl_orbit_mode;

typedef enum cl_format { CL_FORMAT_CSV = 0, CL_FORMAT_JSON = 1 } cl_format;

typedef struct cl_graph cl_graph;

/* Message of the last failure on this thread; empty when none. */
CL_API const char* cl_last_error(void);
CL_API const char* cl_version(void);
CL_API void cl_string_free(char* s);

/* Graph handles. */
CL_API cl_status cl_graph_from_graph6(const char* text, cl_graph** out);
CL_API cl_status cl_graph_from_edge_list(const char* text, cl_graph** out);
CL_API cl_status cl_graph_from_edges(int n, const int* pairs, size_t edge_count, cl_graph** out);
CL_API void cl_graph_free(cl_graph* g);
CL_API int cl_graph_order(const cl_graph* g);
CL_API int cl_graph_size(const cl_graph* g);
CL_API cl_status cl_graph_to_graph6(const cl_graph* g, char** out);
CL_API cl_status cl_graph_to_edge_list(const cl_graph* g, char** out);
CL_API cl_status cl_graph_canonical_graph6(const cl_graph* g, char** out);

/* Corpus text (graph6 lines or edge-list blocks) to an array of handles;
 * release with cl_graph_array_free. */
CL_API cl_status cl_parse_corpus(const char* text, cl_graph*** out, size_t* count);
CL_API void cl_graph_array_free(cl_graph** graphs, size_t count);

/* Connectivity and Hamiltonicity facts as a JSON object. */
CL_API cl_status cl_classify_json(const cl_graph* g, char** out);

/* Bridge construction record as a JSON object. */
CL_API cl_status cl_construct_json(const cl_graph* g, char** out);

/* Insertion family: one graph6 line per member, and a JSON report with the
 * record, members, ineligible orbits and collisions. Either out may be NULL. */
CL_API cl_status cl_insert(const cl_graph* g, cl_orbit_mode mode, char** graph6_lines,
                           char** report_json);

/* Reduction runs as a JSON array of outcomes. With edge_u < 0 every family
 * edge is used; otherwise only (edge_u, edge_v). region_size <= 0 keeps the
 * fifth-root selection size. */
CL_API cl_status cl_reduce_json(const cl_graph* g, int edge_u, int edge_v, cl_orbit_mode mode,
                                int region_size, char** out);

/* Every connected cubic graph on n vertices, canonical graph6, one per line. */
CL_API cl_status cl_enumerate(int n, char** out);
CL_API int cl_enumeration_max_n(void);

CL_API cl_status cl_census(int n_min, int n_max, int jobs, cl_format format, char** out);
CL_API cl_status cl_probe(int n_min, int n_max, int jobs, cl_format format, char** out);
CL_API cl_status cl_family_stats_json(int n, cl_orbit_mode mode, int jobs, char** out);

/* Lemma report over a corpus. *passed is 1 when no hard check failed. */
CL_API cl_status cl_verify_lemmas_json(const cl_graph* const* graphs, size_t count,
                                       cl_orbit_mode mode, int jobs, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* CUBICLAB_CUBICLAB_H_ */
