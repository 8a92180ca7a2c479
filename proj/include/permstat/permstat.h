/* Copyright 2026 The permstat Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the permstat shared library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return PS_OK on success; on any other status the handle outputs
 * are untouched and ps_last_error() describes the problem (thread-local,
 * valid until the next API call on the same thread). Strings returned
 * through char** outputs are heap-allocated and must be released with
 * ps_string_free().
 *
 * Permutations use 1-based positions and one-line notation: contiguous
 * digits up to n = 9 ("52718346"), comma-separated integers beyond.
 */

#ifndef PERMSTAT_PERMSTAT_H_
#define PERMSTAT_PERMSTAT_H_

#include <stdint.h>

#if defined(_WIN32)
#define PS_API __declspec(dllexport)
#else
#define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_ERROR_PARSE = 1,    /* malformed input text */
  PS_ERROR_ARGUMENT = 2, /* precondition violated or unknown name */
  PS_ERROR_INTERNAL = 3
} ps_status;

typedef enum ps_scheme {
  PS_SCHEME_INV = 0,
  PS_SCHEME_MAJ = 1,
  PS_SCHEME_STAT = 2
} ps_scheme;

typedef enum ps_map {
  PS_MAP_RHO = 0,
  PS_MAP_CARLITZ = 1,
  PS_MAP_BURSTEIN = 2
} ps_map;

typedef struct ps_perm ps_perm;
typedef struct ps_pattern ps_pattern;
typedef struct ps_trace ps_trace;
typedef struct ps_table ps_table;
typedef struct ps_report ps_report;

typedef struct ps_stat_vector {
  int64_t des;
  int64_t asc;
  int64_t inv;
  int64_t maj;
  int64_t stat;
  int64_t adj;
  int32_t first;
} ps_stat_vector;

PS_API const char* ps_version(void);
PS_API const char* ps_last_error(void);
PS_API void ps_string_free(char* s);

/* Permutations. */
PS_API ps_status ps_perm_parse(const char* text, ps_perm** out);
PS_API ps_status ps_perm_create(const int32_t* letters, int32_t n,
                                ps_perm** out);
PS_API void ps_perm_free(ps_perm* p);
PS_API int32_t ps_perm_size(const ps_perm* p);
/* 1-based position; returns 0 on invalid arguments. */
PS_API int32_t ps_perm_letter(const ps_perm* p, int32_t position);
PS_API ps_status ps_perm_format(const ps_perm* p, char** out);
PS_API ps_status ps_perm_restrict(const ps_perm* p, int32_t bound,
                                  ps_perm** out);
PS_API ps_status ps_perm_stats(const ps_perm* p, ps_stat_vector* out);

/* Insertion labelings and code tables. `labels` receives the n+1 gap labels
 * (gap s = after position s) and capacity must be at least n+1. */
PS_API ps_status ps_labeling(ps_scheme scheme, const ps_perm* p,
                             int32_t* labels, int32_t capacity);
PS_API ps_status ps_insert(ps_scheme scheme, int32_t label, const ps_perm* p,
                           ps_perm** out);
PS_API ps_status ps_uninsert(ps_scheme scheme, const ps_perm* p,
                             int32_t* label, ps_perm** out);
PS_API ps_status ps_code_of(ps_scheme scheme, const ps_perm* p, char** out);
PS_API ps_status ps_decode(ps_scheme scheme, const char* word, ps_perm** out);

/* Dashed patterns: "[^|!]block(-block)*[$]" over a contiguous alphabet
 * a, b, c, ... */
PS_API ps_status ps_pattern_parse(const char* text, ps_pattern** out);
PS_API void ps_pattern_free(ps_pattern* t);
PS_API ps_status ps_count(const ps_pattern* t, const ps_perm* p,
                          int64_t* out);

/* Bijections. Traces exist for rho and carlitz (insertion chains); asking
 * for a burstein trace is an argument error. Passing NULL as `trace` makes
 * ps_apply_traced equivalent to ps_apply. */
PS_API ps_status ps_apply(ps_map map, const ps_perm* p, ps_perm** out);
PS_API ps_status ps_apply_traced(ps_map map, const ps_perm* p, ps_perm** out,
                                 ps_trace** trace);
PS_API int32_t ps_trace_size(const ps_trace* t);
PS_API ps_status ps_trace_step(const ps_trace* t, int32_t index,
                               int32_t* step, int32_t* digit, char** image);
PS_API void ps_trace_free(ps_trace* t);

/* Exhaustive harness over S_n, 1 <= n <= 10. `stats_csv` is a comma list of
 * statistic names (des, asc, inv, maj, stat, adj, F); `format` is "json" or
 * "csv"; jobs < 1 means one worker. */
PS_API ps_status ps_distribution(const char* stats_csv, int32_t n,
                                 int32_t jobs, ps_table** out);
PS_API ps_status ps_table_format(const ps_table* t, const char* format,
                                 char** out);
PS_API void ps_table_free(ps_table* t);

PS_API ps_status ps_verify(const char* property, int32_t n, int32_t jobs,
                           ps_report** out);
PS_API int32_t ps_report_passed(const ps_report* r);
PS_API int64_t ps_report_cases(const ps_report* r);
PS_API int32_t ps_report_failure_count(const ps_report* r);
PS_API ps_status ps_report_format(const ps_report* r, char** out);
PS_API void ps_report_free(ps_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PERMSTAT_PERMSTAT_H_ */
