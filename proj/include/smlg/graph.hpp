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

#ifndef SMLG_GRAPH_HPP
#define SMLG_GRAPH_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smlg/bitvec.hpp"

namespace smlg {

/// Unvalidated node/edge soup as it arrives from files or callers.
struct RawGraph {
  std::vector<Symbol> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Directed acyclic graph in which every edge advances the level by exactly
/// one. Nodes are indexed topologically: indices are contiguous and grouped
/// by ascending level; in-neighbor lists are sorted ascending, so in(i, d) is
/// the d-th in-neighbor in index order.
class LevelDag {
 public:
  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t level_count() const { return level_begin_.size() - 1; }

  Symbol label(std::size_t i) const;
  std::size_t level_of(std::size_t i) const;
  std::size_t in_degree(std::size_t i) const;
  /// d-th in-neighbor of node i, 0 <= d < in_degree(i).
  std::size_t in(std::size_t i, std::size_t d) const;
  const std::vector<std::size_t>& in_neighbors(std::size_t i) const;

  /// First node index of level l; level l spans [level_begin(l),
  /// level_begin(l + 1)).
  std::size_t level_begin(std::size_t l) const;
  std::size_t level_size(std::size_t l) const;

  /// Distinct labels occurring in the graph.
  Alphabet label_alphabet() const;

  /// Out-neighbor lists derived from the in-neighbor lists; sorted ascending.
  std::vector<std::vector<std::size_t>> out_neighbors() const;

  bool operator==(const LevelDag& other) const = default;

  friend LevelDag validate_levels(const RawGraph& raw);

 private:
  std::vector<Symbol> labels_;
  std::vector<std::size_t> levels_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> level_begin_;
  std::size_t edge_count_ = 0;
};

/// Checks that `raw` is a DAG whose edges each advance the level by exactly
/// one, then produces the canonical topological indexing. Nodes keep their
/// relative order within a level. Throws NotADagError / NotLevelDagError.
LevelDag validate_levels(const RawGraph& raw);

/// Builds the level DAG of a degenerate string: one node per symbol
/// alternative per segment, with complete edges between consecutive
/// segments. Every segment must be nonempty.
LevelDag from_degenerate_string(const std::vector<std::vector<Symbol>>& segments);

/// Result of the classical padding transform.
struct PaddedInstance {
  LevelDag graph;
  std::vector<Symbol> pattern;
};

/// Pads `pattern` to the next power of two with `sentinel` and extends the
/// graph so that matches are preserved exactly: one sentinel node per level
/// fed by all nodes of that level, the sentinel nodes chained, and a chain of
/// |padded pattern| sentinel nodes after the last level. The sentinel must
/// occur neither in the graph labels nor in the pattern.
PaddedInstance pad_classical(const LevelDag& g, std::span<const Symbol> pattern,
                             Symbol sentinel = Symbol{'$'});

/// Re-encodes graph and pattern over the alphabet {0, 1}: every node becomes
/// a chain of ceil(log2 |alphabet|) nodes holding its label's bits, and the
/// pattern is expanded the same way. Matches of the original pattern are
/// preserved; encoded matches may start mid-chain, so callers must verify
/// alignment of reported matches.
PaddedInstance encode_binary(const LevelDag& g, std::span<const Symbol> pattern);

/// Parses the textual .ldag format:
///
///   ldag <node-count> <edge-count> <level-count>
///   node <id> <level> <label>
///   edge <src> <dst>
///
/// '#' starts a comment. Node ids must be 0..n-1 in ascending order, grouped
/// by ascending level, and declared levels must match computed levels.
/// Throws ParseError with a 1-based line number.
LevelDag parse_ldag(std::string_view text);

/// Canonical serialization: header, nodes ascending, edges sorted by
/// (src, dst). parse_ldag(serialize_ldag(g)) == g.
std::string serialize_ldag(const LevelDag& g);

/// Renders a label the way .ldag files and pattern files spell it.
std::string format_label(Symbol s);

/// Parses one pattern line: either a run of single-character labels or
/// whitespace-separated int:<k> tokens.
std::vector<Symbol> parse_pattern_line(std::string_view line);

/// Formats a pattern using the same conventions.
std::string format_pattern(std::span<const Symbol> pattern);

}  // namespace smlg

#endif
