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

#include "minimize.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace smlg_tools {

namespace {

/// `start` with node `victim` removed: incident edges dropped, higher node
/// indices shifted down by one.
Instance drop_node(const Instance& start, std::size_t victim) {
  Instance out;
  out.pattern = start.pattern;
  out.labels.reserve(start.labels.size() - 1);
  for (std::size_t i = 0; i < start.labels.size(); ++i)
    if (i != victim) out.labels.push_back(start.labels[i]);
  for (std::size_t e = 0; e < start.edge_src.size(); ++e) {
    std::size_t s = start.edge_src[e], d = start.edge_dst[e];
    if (s == victim || d == victim) continue;
    out.edge_src.push_back(s > victim ? s - 1 : s);
    out.edge_dst.push_back(d > victim ? d - 1 : d);
  }
  return out;
}

Instance drop_edge(const Instance& start, std::size_t victim) {
  Instance out = start;
  out.edge_src.erase(out.edge_src.begin() + static_cast<std::ptrdiff_t>(victim));
  out.edge_dst.erase(out.edge_dst.begin() + static_cast<std::ptrdiff_t>(victim));
  return out;
}

/// Accepts the candidate if it still validates as a level DAG and still
/// fails. Invalid candidates are skipped, not errors: dropping a node or
/// edge frequently breaks the level structure.
bool try_candidate(const Instance& candidate,
                   const FailurePredicate& still_fails) {
  GraphPtr g = build_graph(candidate);
  if (!g) return false;
  return still_fails(g.get(), candidate.pattern);
}

}  // namespace

Instance instance_from_graph(const smlg_graph* g, const int32_t* pattern,
                             std::size_t pattern_len) {
  Instance inst;
  std::size_t n = smlg_graph_node_count(g);
  inst.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    if (smlg_graph_label(g, i, &inst.labels[i]) != SMLG_OK)
      throw std::runtime_error(smlg_last_error());
  std::size_t *src = nullptr, *dst = nullptr;
  std::size_t edge_count = 0;
  if (smlg_graph_edges(g, &src, &dst, &edge_count) != SMLG_OK)
    throw std::runtime_error(smlg_last_error());
  inst.edge_src.assign(src, src + edge_count);
  inst.edge_dst.assign(dst, dst + edge_count);
  smlg_free(src);
  smlg_free(dst);
  inst.pattern.assign(pattern, pattern + pattern_len);
  return inst;
}

GraphPtr build_graph(const Instance& inst) {
  smlg_graph* g = nullptr;
  smlg_status status = smlg_graph_build(
      inst.labels.data(), inst.labels.size(),
      inst.edge_src.empty() ? nullptr : inst.edge_src.data(),
      inst.edge_dst.empty() ? nullptr : inst.edge_dst.data(),
      inst.edge_src.size(), &g);
  if (status != SMLG_OK) return {};
  return GraphPtr(g);
}

Instance minimize_failing(Instance start, const FailurePredicate& still_fails) {
  if (!try_candidate(start, still_fails))
    throw std::invalid_argument("starting instance does not fail");
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    // Nodes first: one node drop removes many edges at once.
    for (std::size_t i = start.labels.size(); i-- > 0;) {
      if (start.labels.size() <= 1) break;
      Instance candidate = drop_node(start, i);
      if (try_candidate(candidate, still_fails)) {
        start = std::move(candidate);
        shrunk = true;
      }
    }
    for (std::size_t e = start.edge_src.size(); e-- > 0;) {
      Instance candidate = drop_edge(start, e);
      if (try_candidate(candidate, still_fails)) {
        start = std::move(candidate);
        shrunk = true;
      }
    }
    while (start.pattern.size() > 1) {
      Instance candidate = start;
      candidate.pattern.pop_back();
      if (!try_candidate(candidate, still_fails)) break;
      start = std::move(candidate);
      shrunk = true;
    }
    while (start.pattern.size() > 1) {
      Instance candidate = start;
      candidate.pattern.erase(candidate.pattern.begin());
      if (!try_candidate(candidate, still_fails)) break;
      start = std::move(candidate);
      shrunk = true;
    }
  }
  return start;
}

}  // namespace smlg_tools
