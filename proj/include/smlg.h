/* Copyright 2026 The smlg Authors
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

/* C interface of the smlg shared library.
 *
 * Conventions:
 *   - Every fallible function returns smlg_status; SMLG_OK means success.
 *   - On failure, smlg_last_error() returns a human-readable message for the
 *     calling thread, valid until that thread's next failing smlg call.
 *   - Out-parameters are written only on success.
 *   - Strings and arrays returned through out-parameters are heap-allocated;
 *     release them with smlg_free. Graphs are released with smlg_graph_free.
 *   - No function keeps a reference to caller memory after it returns.
 */

#ifndef SMLG_H
#define SMLG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SMLG_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SMLG_API __attribute__((visibility("default")))
#else
#define SMLG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum smlg_status {
  SMLG_OK = 0,
  /* Caller error: bad arguments, unknown engine, input outside an engine's
   * domain (e.g. a non-binary text handed to the quantum text engine). */
  SMLG_ERR_USAGE = 1,
  /* Input text could not be parsed or does not describe a level DAG. */
  SMLG_ERR_PARSE = 2,
  /* A simulation self-check failed: dirty scratch, broken delta form, or a
   * measured result that contradicts the reference answer. */
  SMLG_ERR_STATE = 3,
  /* Unexpected internal failure. */
  SMLG_ERR_INTERNAL = 4
} smlg_status;

typedef enum smlg_pad_mode {
  /* Pad the match matrix with always-matching columns (default). */
  SMLG_PAD_SUBSTATES = 0,
  /* Pad pattern and graph with an explicit sentinel chain instead. */
  SMLG_PAD_CLASSICAL = 1
} smlg_pad_mode;

typedef enum smlg_k_range {
  /* Draw the Grover iteration count from [0, ceil(period)] (default). */
  SMLG_K_RANGE_PERIOD = 0,
  /* Draw it from [0, pattern length]. */
  SMLG_K_RANGE_PATTERN_LENGTH = 1
} smlg_k_range;

/* Library version as "major.minor.patch". Static storage; do not free. */
SMLG_API const char* smlg_version(void);

/* Message of the calling thread's most recent failure. Never NULL; empty if
 * no failure has occurred on this thread. Do not free. */
SMLG_API const char* smlg_last_error(void);

/* Releases memory returned through a char** / size_t** / int32_t**
 * out-parameter. NULL is a no-op. */
SMLG_API void smlg_free(void* p);

/* ------------------------------------------------------------------ */
/* Graphs                                                              */
/* ------------------------------------------------------------------ */

/* Opaque level DAG handle. */
typedef struct smlg_graph smlg_graph;

SMLG_API void smlg_graph_free(smlg_graph* g);

/* Parses the textual .ldag format (header, node and edge lines, '#'
 * comments). Fails with SMLG_ERR_PARSE on malformed input or a graph whose
 * edges do not advance levels by exactly one. */
SMLG_API smlg_status smlg_graph_parse(const char* text, smlg_graph** out);

/* Validates a node/edge soup and builds the canonical level DAG. `labels`
 * has `node_count` entries; `edge_src`/`edge_dst` have `edge_count` entries
 * (they may be NULL when edge_count is 0). Node indices refer to `labels`
 * positions; the builder re-indexes nodes topologically. */
SMLG_API smlg_status smlg_graph_build(const int32_t* labels, size_t node_count,
                                      const size_t* edge_src,
                                      const size_t* edge_dst, size_t edge_count,
                                      smlg_graph** out);

/* Builds the level DAG of a degenerate string: segments are separated by
 * '|', each segment is a nonempty run of single-character labels, and
 * consecutive segments are completely connected. Example: "ab|c|ab". */
SMLG_API smlg_status smlg_graph_from_degenerate(const char* segments,
                                                smlg_graph** out);

/* Canonical .ldag serialization; parse(serialize(g)) reproduces g. */
SMLG_API smlg_status smlg_graph_serialize(const smlg_graph* g, char** out_text);

SMLG_API size_t smlg_graph_node_count(const smlg_graph* g);
SMLG_API size_t smlg_graph_edge_count(const smlg_graph* g);
SMLG_API size_t smlg_graph_level_count(const smlg_graph* g);

/* Label / level of a node; `node` must be < smlg_graph_node_count(g). */
SMLG_API smlg_status smlg_graph_label(const smlg_graph* g, size_t node,
                                      int32_t* out_label);
SMLG_API smlg_status smlg_graph_level_of(const smlg_graph* g, size_t node,
                                         size_t* out_level);

/* All edges sorted by (src, dst). Both arrays have *out_count entries and
 * are released with smlg_free. Empty edge sets yield NULL arrays. */
SMLG_API smlg_status smlg_graph_edges(const smlg_graph* g, size_t** out_src,
                                      size_t** out_dst, size_t* out_count);

/* ------------------------------------------------------------------ */
/* Patterns                                                            */
/* ------------------------------------------------------------------ */

/* Parses one pattern line: a run of single-character labels, or
 * whitespace-separated int:<k> tokens. */
SMLG_API smlg_status smlg_pattern_parse(const char* line, int32_t** out_symbols,
                                        size_t* out_len);

/* Formats a pattern with the same conventions; result is NUL-terminated. */
SMLG_API smlg_status smlg_pattern_format(const int32_t* symbols, size_t len,
                                         char** out_text);

/* ------------------------------------------------------------------ */
/* Instance generation                                                 */
/* ------------------------------------------------------------------ */

typedef struct smlg_gen_params {
  size_t node_count;   /* default 12 */
  size_t level_count;  /* default 4, must be >= 2 */
  double edge_density; /* extra-edge probability in [0, 1], default 0.3 */
  size_t alphabet_size; /* symbols 'a', 'b', ..., default 3 */
  uint64_t seed;       /* default 0 */
} smlg_gen_params;

SMLG_API void smlg_gen_params_init(smlg_gen_params* params);

/* Seed-deterministic random level DAG; equal params give equal graphs. */
SMLG_API smlg_status smlg_gen_level_dag(const smlg_gen_params* params,
                                        smlg_graph** out);

/* Seed-deterministic pattern over g's label alphabet. With planted != 0 the
 * pattern is copied off a random path (a match is guaranteed); otherwise
 * sampling is rejected until the reference matcher says no (bounded retries,
 * then SMLG_ERR_USAGE). */
SMLG_API smlg_status smlg_gen_pattern(const smlg_graph* g, int planted,
                                      size_t length, uint64_t seed,
                                      int32_t** out_symbols, size_t* out_len);

/* ------------------------------------------------------------------ */
/* Matching                                                            */
/* ------------------------------------------------------------------ */

typedef struct smlg_options {
  uint64_t seed; /* RNG seed for the randomized engines, default 0 */
  int c;         /* amplification round budget, default 10 */
  int pad_mode;  /* smlg_pad_mode, default SMLG_PAD_SUBSTATES */
  int k_range;   /* smlg_k_range, default SMLG_K_RANGE_PERIOD */
  int double_superposition; /* nonzero: double the track space, default 0 */
  int check_invariants; /* nonzero: run per-step reference checks, default 0 */
  /* Optional gate trace sink; called once per traced operation with a
   * NUL-terminated line that is only valid during the call. */
  void (*trace_fn)(const char* line, void* user);
  void* trace_user;
} smlg_options;

SMLG_API void smlg_options_init(smlg_options* options);

typedef struct smlg_result {
  int answer; /* 1 = match found, 0 = no match */
  /* Text engines: end position of a verified occurrence, -1 if none.
   * Graph engines: always -1. */
  long long end_position;
  /* Quantum engines: classical gate operations simulated / Grover-stage
   * operations charged. Zero for the classical engines. */
  unsigned long long gate_ops;
  unsigned long long grover_ops;
  int rounds_used;                    /* amplification rounds consumed */
  unsigned long long marked_tracks;   /* tracks carrying the marked bit */
  unsigned long long track_count;     /* size of the simulated track space */
  unsigned long long invariant_checks;     /* 0 unless check_invariants */
  unsigned long long invariant_violations; /* 0 unless check_invariants */
} smlg_result;

/* Matches `pattern` against `text` (both NUL-terminated, nonempty, with
 * |pattern| <= |text|). Engines: "naive", "shift-and", "quantum-sim". The
 * quantum engine requires both strings to be over {'0','1'} and fails with
 * SMLG_ERR_USAGE otherwise. `options` may be NULL for defaults. */
SMLG_API smlg_status smlg_match_text(const char* text, const char* pattern,
                                     const char* engine,
                                     const smlg_options* options,
                                     smlg_result* out);

/* Decides whether some path in g spells `pattern`. Engines: "dp",
 * "shift-and", "quantum-sim", "enum" ("enum" is exhaustive and limited to
 * graphs with at most 12 nodes). Patterns of length 1 are answered by a
 * plain label scan for every engine. `options` may be NULL for defaults. */
SMLG_API smlg_status smlg_match_dag(const smlg_graph* g,
                                    const int32_t* pattern, size_t pattern_len,
                                    const char* engine,
                                    const smlg_options* options,
                                    smlg_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SMLG_H */
