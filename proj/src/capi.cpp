// Copyright 2026 The smlg Authors
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

#include "smlg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smlg/bitshift.hpp"
#include "smlg/bitvec.hpp"
#include "smlg/checks.hpp"
#include "smlg/errors.hpp"
#include "smlg/graph.hpp"
#include "smlg/oracle.hpp"
#include "smlg/qgraph.hpp"
#include "smlg/qtext.hpp"

struct smlg_graph {
  smlg::LevelDag dag;
};

namespace {

thread_local std::string t_last_error;

smlg_status fail(smlg_status status, std::string message) {
  t_last_error = std::move(message);
  return status;
}

/// Runs `body` and maps exceptions onto status codes. Most-derived types
/// first: the scratch/state errors specialize logic_error, the parse and
/// generation errors specialize runtime_error.
template <typename F>
smlg_status guarded(F&& body) {
  try {
    return body();
  } catch (const smlg::ScratchNotCleanError& e) {
    return fail(SMLG_ERR_STATE, e.what());
  } catch (const smlg::StateCorruptionError& e) {
    return fail(SMLG_ERR_STATE, e.what());
  } catch (const smlg::ParseError& e) {
    return fail(SMLG_ERR_PARSE, e.what());
  } catch (const smlg::NotADagError& e) {
    return fail(SMLG_ERR_PARSE, e.what());
  } catch (const smlg::NotLevelDagError& e) {
    return fail(SMLG_ERR_PARSE, e.what());
  } catch (const smlg::GenerationError& e) {
    return fail(SMLG_ERR_USAGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SMLG_ERR_USAGE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SMLG_ERR_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SMLG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SMLG_ERR_INTERNAL, e.what());
  }
}

char* dup_string(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

template <typename T>
T* dup_array(const std::vector<T>& v) {
  if (v.empty()) return nullptr;
  T* out = static_cast<T*>(std::malloc(v.size() * sizeof(T)));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, v.data(), v.size() * sizeof(T));
  return out;
}

smlg_options default_options() {
  smlg_options o;
  smlg_options_init(&o);
  return o;
}

/// Validates the shared option block and rejects values outside the enums.
smlg_status check_options(const smlg_options& o) {
  if (o.c < 1)
    return fail(SMLG_ERR_USAGE, "round budget c must be at least 1");
  if (o.pad_mode != SMLG_PAD_SUBSTATES && o.pad_mode != SMLG_PAD_CLASSICAL)
    return fail(SMLG_ERR_USAGE, "unknown pad mode");
  if (o.k_range != SMLG_K_RANGE_PERIOD &&
      o.k_range != SMLG_K_RANGE_PATTERN_LENGTH)
    return fail(SMLG_ERR_USAGE, "unknown k-range");
  return SMLG_OK;
}

std::function<void(std::string_view)> make_trace(const smlg_options& o) {
  if (!o.trace_fn) return {};
  auto* fn = o.trace_fn;
  void* user = o.trace_user;
  return [fn, user](std::string_view line) {
    std::string owned(line);
    fn(owned.c_str(), user);
  };
}

void clear_result(smlg_result* r) {
  *r = smlg_result{};
  r->end_position = -1;
}

}  // namespace

extern "C" {

const char* smlg_version(void) { return "0.1.0"; }

const char* smlg_last_error(void) { return t_last_error.c_str(); }

void smlg_free(void* p) { std::free(p); }

void smlg_graph_free(smlg_graph* g) { delete g; }

smlg_status smlg_graph_parse(const char* text, smlg_graph** out) {
  if (!text || !out) return fail(SMLG_ERR_USAGE, "text and out must be non-NULL");
  return guarded([&] {
    *out = new smlg_graph{smlg::parse_ldag(text)};
    return SMLG_OK;
  });
}

smlg_status smlg_graph_build(const int32_t* labels, size_t node_count,
                             const size_t* edge_src, const size_t* edge_dst,
                             size_t edge_count, smlg_graph** out) {
  if (!out) return fail(SMLG_ERR_USAGE, "out must be non-NULL");
  if (node_count > 0 && !labels)
    return fail(SMLG_ERR_USAGE, "labels must be non-NULL");
  if (edge_count > 0 && (!edge_src || !edge_dst))
    return fail(SMLG_ERR_USAGE, "edge arrays must be non-NULL");
  return guarded([&] {
    smlg::RawGraph raw;
    raw.labels.assign(labels, labels + node_count);
    raw.edges.reserve(edge_count);
    for (size_t e = 0; e < edge_count; ++e)
      raw.edges.emplace_back(edge_src[e], edge_dst[e]);
    *out = new smlg_graph{smlg::validate_levels(raw)};
    return SMLG_OK;
  });
}

smlg_status smlg_graph_from_degenerate(const char* segments, smlg_graph** out) {
  if (!segments || !out)
    return fail(SMLG_ERR_USAGE, "segments and out must be non-NULL");
  return guarded([&] {
    std::vector<std::vector<smlg::Symbol>> parsed;
    std::string_view rest(segments);
    while (true) {
      size_t bar = rest.find('|');
      std::string_view piece = rest.substr(0, bar);
      parsed.push_back(smlg::symbols_from_string(piece));
      if (bar == std::string_view::npos) break;
      rest.remove_prefix(bar + 1);
    }
    *out = new smlg_graph{smlg::from_degenerate_string(parsed)};
    return SMLG_OK;
  });
}

smlg_status smlg_graph_serialize(const smlg_graph* g, char** out_text) {
  if (!g || !out_text)
    return fail(SMLG_ERR_USAGE, "graph and out must be non-NULL");
  return guarded([&] {
    *out_text = dup_string(smlg::serialize_ldag(g->dag));
    return SMLG_OK;
  });
}

size_t smlg_graph_node_count(const smlg_graph* g) {
  return g ? g->dag.node_count() : 0;
}

size_t smlg_graph_edge_count(const smlg_graph* g) {
  return g ? g->dag.edge_count() : 0;
}

size_t smlg_graph_level_count(const smlg_graph* g) {
  return g ? g->dag.level_count() : 0;
}

smlg_status smlg_graph_label(const smlg_graph* g, size_t node,
                             int32_t* out_label) {
  if (!g || !out_label)
    return fail(SMLG_ERR_USAGE, "graph and out must be non-NULL");
  return guarded([&] {
    *out_label = g->dag.label(node);
    return SMLG_OK;
  });
}

smlg_status smlg_graph_level_of(const smlg_graph* g, size_t node,
                                size_t* out_level) {
  if (!g || !out_level)
    return fail(SMLG_ERR_USAGE, "graph and out must be non-NULL");
  return guarded([&] {
    *out_level = g->dag.level_of(node);
    return SMLG_OK;
  });
}

smlg_status smlg_graph_edges(const smlg_graph* g, size_t** out_src,
                             size_t** out_dst, size_t* out_count) {
  if (!g || !out_src || !out_dst || !out_count)
    return fail(SMLG_ERR_USAGE, "all arguments must be non-NULL");
  return guarded([&] {
    std::vector<size_t> src, dst;
    src.reserve(g->dag.edge_count());
    dst.reserve(g->dag.edge_count());
    // in-neighbor lists are sorted, so walking destinations in index order
    // yields edges sorted by (src, dst) after a stable regroup by source.
    std::vector<std::vector<size_t>> by_src(g->dag.node_count());
    for (size_t i = 0; i < g->dag.node_count(); ++i)
      for (size_t in : g->dag.in_neighbors(i)) by_src[in].push_back(i);
    for (size_t s = 0; s < by_src.size(); ++s)
      for (size_t d : by_src[s]) {
        src.push_back(s);
        dst.push_back(d);
      }
    size_t* src_arr = dup_array(src);
    size_t* dst_arr = nullptr;
    try {
      dst_arr = dup_array(dst);
    } catch (...) {
      std::free(src_arr);
      throw;
    }
    *out_src = src_arr;
    *out_dst = dst_arr;
    *out_count = src.size();
    return SMLG_OK;
  });
}

smlg_status smlg_pattern_parse(const char* line, int32_t** out_symbols,
                               size_t* out_len) {
  if (!line || !out_symbols || !out_len)
    return fail(SMLG_ERR_USAGE, "all arguments must be non-NULL");
  return guarded([&] {
    std::vector<smlg::Symbol> symbols = smlg::parse_pattern_line(line);
    *out_symbols = dup_array(symbols);
    *out_len = symbols.size();
    return SMLG_OK;
  });
}

smlg_status smlg_pattern_format(const int32_t* symbols, size_t len,
                                char** out_text) {
  if (!out_text || (len > 0 && !symbols))
    return fail(SMLG_ERR_USAGE, "symbols and out must be non-NULL");
  return guarded([&] {
    *out_text = dup_string(
        smlg::format_pattern(std::span<const smlg::Symbol>(symbols, len)));
    return SMLG_OK;
  });
}

void smlg_gen_params_init(smlg_gen_params* params) {
  if (!params) return;
  smlg::oracle::GenParams defaults;
  params->node_count = defaults.node_count;
  params->level_count = defaults.level_count;
  params->edge_density = defaults.edge_density;
  params->alphabet_size = defaults.alphabet_size;
  params->seed = defaults.seed;
}

smlg_status smlg_gen_level_dag(const smlg_gen_params* params,
                               smlg_graph** out) {
  if (!params || !out)
    return fail(SMLG_ERR_USAGE, "params and out must be non-NULL");
  return guarded([&] {
    smlg::oracle::GenParams p;
    p.node_count = params->node_count;
    p.level_count = params->level_count;
    p.edge_density = params->edge_density;
    p.alphabet_size = params->alphabet_size;
    p.seed = params->seed;
    *out = new smlg_graph{smlg::oracle::gen_level_dag(p)};
    return SMLG_OK;
  });
}

smlg_status smlg_gen_pattern(const smlg_graph* g, int planted, size_t length,
                             uint64_t seed, int32_t** out_symbols,
                             size_t* out_len) {
  if (!g || !out_symbols || !out_len)
    return fail(SMLG_ERR_USAGE, "graph and outs must be non-NULL");
  return guarded([&] {
    std::vector<smlg::Symbol> p =
        smlg::oracle::gen_pattern(g->dag, planted != 0, length, seed);
    *out_symbols = dup_array(p);
    *out_len = p.size();
    return SMLG_OK;
  });
}

void smlg_options_init(smlg_options* options) {
  if (!options) return;
  *options = smlg_options{};
  options->c = 10;
}

smlg_status smlg_match_text(const char* text, const char* pattern,
                            const char* engine, const smlg_options* options,
                            smlg_result* out) {
  if (!text || !pattern || !engine || !out)
    return fail(SMLG_ERR_USAGE, "text, pattern, engine, out must be non-NULL");
  const smlg_options opt = options ? *options : default_options();
  if (smlg_status s = check_options(opt); s != SMLG_OK) return s;
  std::string_view text_view(text), pattern_view(pattern), engine_view(engine);
  if (text_view.empty() || pattern_view.empty())
    return fail(SMLG_ERR_USAGE, "text and pattern must be nonempty");
  if (pattern_view.size() > text_view.size())
    return fail(SMLG_ERR_USAGE, "pattern must not be longer than the text");
  clear_result(out);
  return guarded([&] {
    std::vector<smlg::Symbol> t = smlg::symbols_from_string(text_view);
    std::vector<smlg::Symbol> p = smlg::symbols_from_string(pattern_view);
    if (engine_view == "naive" || engine_view == "shift-and") {
      std::vector<size_t> ends =
          engine_view == "naive" ? smlg::oracle::naive_text_match(t, p)
                                 : smlg::bitshift::shift_and_text(t, p);
      out->answer = ends.empty() ? 0 : 1;
      if (!ends.empty())
        out->end_position = static_cast<long long>(ends.front());
      return SMLG_OK;
    }
    if (engine_view != "quantum-sim")
      return fail(SMLG_ERR_USAGE,
                  "unknown text engine '" + std::string(engine_view) +
                      "' (expected naive, shift-and, or quantum-sim)");
    smlg::qtext::TextRunConfig config;
    config.budget = opt.c;
    config.seed = opt.seed;
    config.k_range = opt.k_range == SMLG_K_RANGE_PATTERN_LENGTH
                         ? smlg::grover::KRange::kPatternLength
                         : smlg::grover::KRange::kPeriod;
    config.double_superposition = opt.double_superposition != 0;
    config.trace = make_trace(opt);
    std::optional<smlg::checks::WindowPredicateChecker> checker;
    if (opt.check_invariants) {
      checker.emplace(text_view, pattern_view);
      config.hooks = checker->hooks();
    }
    smlg::qtext::TextOutcome outcome =
        smlg::qtext::run_quantum_text(text_view, pattern_view, config);
    out->answer = outcome.found ? 1 : 0;
    if (outcome.end_position)
      out->end_position = static_cast<long long>(*outcome.end_position);
    out->gate_ops = outcome.gate_ops;
    out->grover_ops = outcome.grover_ops;
    out->rounds_used = outcome.rounds_used;
    out->marked_tracks = outcome.marked_tracks;
    out->track_count = outcome.track_count;
    if (checker) {
      out->invariant_checks = checker->stats().checks;
      out->invariant_violations = checker->stats().violations;
    }
    return SMLG_OK;
  });
}

smlg_status smlg_match_dag(const smlg_graph* g, const int32_t* pattern,
                           size_t pattern_len, const char* engine,
                           const smlg_options* options, smlg_result* out) {
  if (!g || !pattern || !engine || !out)
    return fail(SMLG_ERR_USAGE, "graph, pattern, engine, out must be non-NULL");
  if (pattern_len == 0)
    return fail(SMLG_ERR_USAGE, "pattern must be nonempty");
  const smlg_options opt = options ? *options : default_options();
  if (smlg_status s = check_options(opt); s != SMLG_OK) return s;
  std::string_view engine_view(engine);
  if (engine_view != "dp" && engine_view != "shift-and" &&
      engine_view != "quantum-sim" && engine_view != "enum")
    return fail(SMLG_ERR_USAGE,
                "unknown graph engine '" + std::string(engine_view) +
                    "' (expected dp, shift-and, quantum-sim, or enum)");
  clear_result(out);
  std::span<const smlg::Symbol> p(pattern, pattern_len);
  return guarded([&] {
    if (pattern_len == 1) {
      for (size_t i = 0; i < g->dag.node_count(); ++i)
        if (g->dag.label(i) == p[0]) {
          out->answer = 1;
          break;
        }
      return SMLG_OK;
    }
    if (engine_view == "dp") {
      out->answer = smlg::oracle::dp_match(g->dag, p).any_full() ? 1 : 0;
      return SMLG_OK;
    }
    if (engine_view == "enum") {
      out->answer = smlg::oracle::enumerate_paths_match(g->dag, p) ? 1 : 0;
      return SMLG_OK;
    }
    if (engine_view == "shift-and") {
      out->answer =
          smlg::bitshift::shift_and_level_dag(g->dag, p).found ? 1 : 0;
      return SMLG_OK;
    }
    smlg::qgraph::GraphRunConfig config;
    config.budget = opt.c;
    config.seed = opt.seed;
    config.k_range = opt.k_range == SMLG_K_RANGE_PATTERN_LENGTH
                         ? smlg::grover::KRange::kPatternLength
                         : smlg::grover::KRange::kPeriod;
    config.double_superposition = opt.double_superposition != 0;
    config.pad_mode = opt.pad_mode == SMLG_PAD_CLASSICAL
                          ? smlg::qgraph::PadMode::kClassical
                          : smlg::qgraph::PadMode::kSubstates;
    config.trace = make_trace(opt);
    std::optional<smlg::checks::InvariantChecker> checker;
    if (opt.check_invariants) {
      checker.emplace();
      config.hooks = checker->hooks();
    }
    smlg::qgraph::GraphOutcome outcome =
        smlg::qgraph::run_quantum_smlg(g->dag, p, config);
    out->answer = outcome.found ? 1 : 0;
    out->gate_ops = outcome.gate_ops;
    out->grover_ops = outcome.grover_ops;
    out->rounds_used = outcome.rounds_used;
    out->marked_tracks = outcome.marked_tracks;
    out->track_count = outcome.track_count;
    if (checker) {
      out->invariant_checks = checker->stats().checks;
      out->invariant_violations = checker->stats().violations;
    }
    return SMLG_OK;
  });
}

}  // extern "C"
