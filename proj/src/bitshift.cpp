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

#include "smlg/bitshift.hpp"

#include <stdexcept>

namespace smlg::bitshift {

namespace {

Alphabet joint_alphabet(std::span<const Symbol> a, std::span<const Symbol> b) {
  std::vector<Symbol> symbols(a.begin(), a.end());
  symbols.insert(symbols.end(), b.begin(), b.end());
  return Alphabet(std::move(symbols));
}

}  // namespace

std::vector<std::size_t> shift_and_text(std::span<const Symbol> text,
                                        std::span<const Symbol> pattern) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  std::vector<std::size_t> ends;
  if (text.empty()) return ends;
  MatchMatrix matrix(pattern, joint_alphabet(text, pattern));
  std::size_t m = pattern.size();

  BitVector b(m);
  for (std::size_t i = 0; i < text.size(); ++i) {
    b.set(0);
    b &= matrix.column(text[i]);
    if (b.get(m - 1)) ends.push_back(i);
    b = b.shl(1);
  }
  return ends;
}

DagMatchResult shift_and_level_dag(const LevelDag& g,
                                   std::span<const Symbol> pattern,
                                   bool keep_tables) {
  if (pattern.size() < 2) {
    throw std::invalid_argument("pattern length must be at least 2");
  }
  std::vector<Symbol> labels;
  labels.reserve(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) labels.push_back(g.label(i));
  MatchMatrix matrix(pattern, joint_alphabet(labels, pattern));
  std::size_t m = pattern.size();

  DagMatchResult result;
  std::vector<BitVector> shifted(g.node_count());
  if (keep_tables) result.node_tables.reserve(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    BitVector b(m);
    for (std::size_t k : g.in_neighbors(i)) b |= shifted[k];
    b.set(0);
    b &= matrix.column(g.label(i));
    if (b.get(m - 1)) result.found = true;
    if (keep_tables) result.node_tables.push_back(b);
    shifted[i] = b.shl(1);
  }
  return result;
}

}  // namespace smlg::bitshift
