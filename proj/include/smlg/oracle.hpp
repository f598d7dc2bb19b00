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

#ifndef SMLG_ORACLE_HPP
#define SMLG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smlg/graph.hpp"

namespace smlg::oracle {

/// Prefix-occurrence table of a pattern in a level DAG: entry (i, j) says
/// whether some path ending at node i spells P[0..j].
class DpTable {
 public:
  DpTable(std::size_t nodes, std::size_t m)
      : m_(m), rows_(nodes, BitVector(m)) {}

  std::size_t pattern_length() const { return m_; }
  std::size_t node_count() const { return rows_.size(); }
  bool at(std::size_t node, std::size_t j) const { return rows_[node].get(j); }
  const BitVector& row(std::size_t node) const { return rows_[node]; }
  BitVector& row(std::size_t node) { return rows_[node]; }

  /// Whether any node with index <= last has a full-pattern occurrence.
  bool any_full_up_to(std::size_t last) const;
  bool any_full() const { return any_full_up_to(node_count() - 1); }

 private:
  std::size_t m_;
  std::vector<BitVector> rows_;
};

/// Dynamic program over the topological node order:
///   table(i, j) = (label(i) == P[j]) and (j == 0 or
///                  exists d: table(in(i, d), j - 1)).
DpTable dp_match(const LevelDag& g, std::span<const Symbol> pattern);

/// Like dp_match but over the pattern conceptually extended to `width`
/// positions that match every label (positions >= |P| are wildcards).
DpTable dp_match_extended(const LevelDag& g, std::span<const Symbol> pattern,
                          std::size_t width);

/// Ground truth by explicit enumeration of all |P|-node paths. Only for tiny
/// graphs; throws std::invalid_argument above `max_nodes`.
bool enumerate_paths_match(const LevelDag& g, std::span<const Symbol> pattern,
                           std::size_t max_nodes = 12);

/// All end positions of occurrences of `pattern` in `text` by direct
/// character comparison.
std::vector<std::size_t> naive_text_match(std::span<const Symbol> text,
                                          std::span<const Symbol> pattern);

struct GenParams {
  std::size_t node_count = 12;
  std::size_t level_count = 4;   // >= 2
  double edge_density = 0.3;     // extra-edge probability in [0, 1]
  std::size_t alphabet_size = 3; // symbols 'a', 'b', ...
  std::uint64_t seed = 0;
};

/// Seed-deterministic random level DAG. Every level gets at least one node
/// and every non-source node at least one in-edge, so the level structure is
/// connected. The result always passes validate_levels.
LevelDag gen_level_dag(const GenParams& params);

/// Seed-deterministic pattern over the graph's label alphabet. With
/// `planted` the labels are copied from a random path, so dp_match accepts;
/// otherwise patterns are sampled until dp_match rejects (up to 1000 tries,
/// then GenerationError).
std::vector<Symbol> gen_pattern(const LevelDag& g, bool planted,
                                std::size_t length, std::uint64_t seed);

}  // namespace smlg::oracle

#endif
