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

// Greedy shrinking of failing graph/pattern instances, driven entirely
// through the public C API so the dumped reproducer exercises the same code
// path a user of the library would.

#ifndef SMLG_TOOLS_MINIMIZE_HPP
#define SMLG_TOOLS_MINIMIZE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "smlg.h"

namespace smlg_tools {

struct GraphDeleter {
  void operator()(smlg_graph* g) const { smlg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<smlg_graph, GraphDeleter>;

/// Plain node/edge/pattern description of one instance, the form the
/// shrinker mutates. Node indices refer to positions in `labels`.
struct Instance {
  std::vector<int32_t> labels;
  std::vector<std::size_t> edge_src;
  std::vector<std::size_t> edge_dst;
  std::vector<int32_t> pattern;
};

/// Extracts the description of an existing graph handle plus a pattern.
Instance instance_from_graph(const smlg_graph* g, const int32_t* pattern,
                             std::size_t pattern_len);

/// Builds a graph from the description; empty pointer if the candidate does
/// not validate as a level DAG.
GraphPtr build_graph(const Instance& inst);

/// Returns whether an instance still triggers the failure under
/// investigation. The graph handle is freshly built for every candidate.
using FailurePredicate =
    std::function<bool(const smlg_graph* g, const std::vector<int32_t>& pattern)>;

/// Greedy fixpoint shrink: repeatedly tries to drop a node (with its
/// incident edges), drop an edge, or shorten the pattern at either end,
/// keeping any candidate that still validates and still fails. The result
/// fails the predicate and cannot be shrunk further by any single move.
/// `start` must itself fail the predicate. Deterministic.
Instance minimize_failing(Instance start, const FailurePredicate& still_fails);

}  // namespace smlg_tools

#endif
