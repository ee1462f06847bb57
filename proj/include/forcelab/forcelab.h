// Copyright 2026 The forcelab Authors
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
#ifndef FORCELAB_FORCELAB_H_
#define FORCELAB_FORCELAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FORCELAB_BUILDING)
#define FL_API __declspec(dllexport)
#else
#define FL_API __declspec(dllimport)
#endif
#else
#define FL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fl_graph fl_graph;
typedef struct fl_assignment fl_assignment;

typedef enum fl_status {
  FL_OK = 0,
  FL_E_INVALID_ARGUMENT = 1,
  FL_E_PARSE = 2,
  FL_E_CAP_EXCEEDED = 3,
  FL_E_PRECONDITION = 4,
  FL_E_NO_PERFECT_MATCHING = 5,
  FL_E_NOT_BIPARTITE = 6,
  FL_E_NOT_TRANSITIVE = 7,
  FL_E_INFEASIBLE = 8,
  FL_E_IO = 9,
  FL_E_INTERNAL = 10
} fl_status;

typedef struct fl_limits {
  int max_hypercube_n;
  int max_cycle_edges;
  uint64_t max_cycles;
  uint64_t max_matchings;
  int max_automorphism_vertices;
  uint64_t max_vertex_structures;
  int max_support_edges;
  int max_blue_n;
  int max_lp_blue_n;
} fl_limits;

FL_API const char* fl_version(void);
FL_API const char* fl_status_name(fl_status status);
/* Message of the last failed call on this thread; empty after success. */
FL_API const char* fl_last_error(void);
FL_API void fl_string_free(char* s);
FL_API void fl_limits_default(fl_limits* limits);

/* Families: hypercube, cycle, path, complete (size n); grid (n x m ladder
 * of paths); example14, example18, example19 (n, m ignored). */
FL_API fl_status fl_graph_generate(const char* family, int n, int m, const fl_limits* limits, fl_graph** out);
FL_API fl_status fl_graph_from_text(const char* text, fl_graph** out);
FL_API fl_status fl_graph_to_text(const fl_graph* g, char** out);
FL_API fl_status fl_graph_to_json(const fl_graph* g, char** out);
FL_API int fl_graph_vertex_count(const fl_graph* g);
FL_API int fl_graph_edge_count(const fl_graph* g);
FL_API void fl_graph_free(fl_graph* g);

/* An assignment owns a copy of its graph. */
FL_API fl_status fl_assignment_from_json(const char* json, fl_assignment** out);
/* Constant 1/deg on a regular graph. */
FL_API fl_status fl_assignment_uniform(const fl_graph* g, fl_assignment** out);
FL_API fl_status fl_assignment_to_json(const fl_assignment* a, char** out);
FL_API fl_status fl_assignment_graph(const fl_assignment* a, fl_graph** out);
FL_API void fl_assignment_free(fl_assignment* a);

/* Every call below writes a JSON document to *out on success. Edge sets are
 * edge indices into the sorted edge list. A NULL limits pointer selects the
 * defaults. */
FL_API fl_status fl_perfect_matchings(const fl_graph* g, const fl_limits* limits, char** out);
FL_API fl_status fl_forcing_stats(const fl_graph* g, int include_table, const fl_limits* limits, char** out);
FL_API fl_status fl_forcing_number(const fl_graph* g, const int* matching, size_t matching_size,
                                   const fl_limits* limits, char** out);
FL_API fl_status fl_check_forcing_set(const fl_graph* g, const int* matching, size_t matching_size, const int* set,
                                      size_t set_size, char** out);

/* method: "auto", "cycles" or "lp"; NULL means "auto". */
FL_API fl_status fl_fractional_forcing(const fl_assignment* gamma, const char* method, const fl_limits* limits,
                                       char** out);
/* mode: "min", "max-exact", "max-bound" or "spectrum". */
FL_API fl_status fl_graph_ff(const fl_graph* g, const char* mode, const fl_limits* limits, char** out);
FL_API fl_status fl_check_forcing_function(const fl_assignment* alpha, const fl_assignment* gamma, char** out);
FL_API fl_status fl_criterion(const fl_assignment* gamma, const int* set, size_t set_size, const fl_limits* limits,
                              char** out);
/* lambdas are rational strings, one per part. */
FL_API fl_status fl_decompose(const fl_assignment* alpha, const fl_assignment* gamma,
                              const fl_assignment* const* parts, const char* const* lambdas, size_t part_count,
                              char** out);
/* perms holds perm_count vertex permutations of length |V|, back to back.
 * NULL averages over the full automorphism group. */
FL_API fl_status fl_symmetrize(const fl_assignment* gamma, const int* perms, size_t perm_count,
                               const fl_limits* limits, char** out);

/* lower_a: optional constant 0 < a < 1 for the reported a * 2^(n-1) lower
 * bound, which is quoted from the literature and not constructed here. */
FL_API fl_status fl_hypercube_bound(int n, int verify, const char* lower_a, const fl_limits* limits, char** out);
/* method: "lp" or "cycles". */
FL_API fl_status fl_verify_blue(int n, const char* method, const fl_limits* limits, char** out);
FL_API fl_status fl_fixture(const char* name, const fl_limits* limits, char** out);
FL_API fl_status fl_fixture_names(char** out);

#ifdef __cplusplus
}
#endif

#endif  /* FORCELAB_FORCELAB_H_ */
