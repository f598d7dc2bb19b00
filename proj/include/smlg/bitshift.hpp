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

#ifndef SMLG_BITSHIFT_HPP
#define SMLG_BITSHIFT_HPP

#include <span>
#include <vector>

#include "smlg/graph.hpp"

namespace smlg::bitshift {

/// Shift-And over plain text. Per character: set bit 0, mask with the match
/// column, report when bit m-1 survives, then shift. Returns all end
/// positions.
std::vector<std::size_t> shift_and_text(std::span<const Symbol> text,
                                        std::span<const Symbol> pattern);

struct DagMatchResult {
  bool found = false;
  /// Per-node state before its shift; bit j set means P[0..j] has an
  /// occurrence ending at that node. Filled only when requested.
  std::vector<BitVector> node_tables;
};

/// Shift-And generalized to a level DAG: each node folds the shifted vectors
/// of its in-neighbors with OR in place of the single text predecessor.
/// Nodes are processed in index order, one vector per node. Pattern length
/// must be at least 2.
DagMatchResult shift_and_level_dag(const LevelDag& g,
                                   std::span<const Symbol> pattern,
                                   bool keep_tables = false);

}  // namespace smlg::bitshift

#endif
