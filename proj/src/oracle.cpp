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

#include "smlg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "smlg/errors.hpp"
#include "smlg/rand.hpp"

namespace smlg::oracle {

bool DpTable::any_full_up_to(std::size_t last) const {
  if (last >= rows_.size()) throw std::out_of_range("node index out of range");
  for (std::size_t i = 0; i <= last; ++i) {
    if (rows_[i].get(m_ - 1)) return true;
  }
  return false;
}

DpTable dp_match(const LevelDag& g, std::span<const Symbol> pattern) {
  return dp_match_extended(g, pattern, pattern.size());
}

DpTable dp_match_extended(const LevelDag& g, std::span<const Symbol> pattern,
                          std::size_t width) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  if (width < pattern.size()) {
    throw std::invalid_argument("width must cover the pattern");
  }
  DpTable table(g.node_count(), width);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      bool label_ok = j >= pattern.size() || g.label(i) == pattern[j];
      if (!label_ok) continue;
      bool reachable = false;
      if (j == 0) {
        reachable = true;
      } else {
        for (std::size_t k : g.in_neighbors(i)) {
          if (table.at(k, j - 1)) {
            reachable = true;
            break;
          }
        }
      }
      if (reachable) table.row(i).set(j);
    }
  }
  return table;
}

bool enumerate_paths_match(const LevelDag& g, std::span<const Symbol> pattern,
                           std::size_t max_nodes) {
  if (g.node_count() > max_nodes) {
    throw std::invalid_argument("graph too large for path enumeration");
  }
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  auto out = g.out_neighbors();

  // Depth-first walk over every path of |P| nodes.
  std::vector<std::size_t> stack;
  auto extend = [&](auto&& self, std::size_t v, std::size_t depth) -> bool {
    if (g.label(v) != pattern[depth]) return false;
    if (depth + 1 == pattern.size()) return true;
    for (std::size_t w : out[v]) {
      if (self(self, w, depth + 1)) return true;
    }
    return false;
  };
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (extend(extend, v, 0)) return true;
  }
  return false;
}

std::vector<std::size_t> naive_text_match(std::span<const Symbol> text,
                                          std::span<const Symbol> pattern) {
  std::vector<std::size_t> ends;
  if (pattern.empty() || pattern.size() > text.size()) return ends;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      if (text[i + j] != pattern[j]) {
        ok = false;
        break;
      }
    }
    if (ok) ends.push_back(i + pattern.size() - 1);
  }
  return ends;
}

LevelDag gen_level_dag(const GenParams& params) {
  if (params.level_count < 2) {
    throw std::invalid_argument("level count must be at least 2");
  }
  if (params.node_count < params.level_count) {
    throw std::invalid_argument("need at least one node per level");
  }
  if (params.alphabet_size < 1 || params.alphabet_size > 26) {
    throw std::invalid_argument("alphabet size must be in [1, 26]");
  }
  if (params.edge_density < 0.0 || params.edge_density > 1.0) {
    throw std::invalid_argument("edge density must be in [0, 1]");
  }
  Rng rng(params.seed);

  std::vector<std::size_t> level_sizes(params.level_count, 1);
  for (std::size_t extra = params.node_count - params.level_count; extra > 0;
       --extra) {
    level_sizes[uniform_below(rng, params.level_count)]++;
  }
  std::vector<std::size_t> level_begin(params.level_count + 1, 0);
  for (std::size_t l = 0; l < params.level_count; ++l) {
    level_begin[l + 1] = level_begin[l] + level_sizes[l];
  }

  RawGraph raw;
  raw.labels.reserve(params.node_count);
  for (std::size_t i = 0; i < params.node_count; ++i) {
    raw.labels.push_back(
        static_cast<Symbol>('a' + uniform_below(rng, params.alphabet_size)));
  }
  for (std::size_t l = 1; l < params.level_count; ++l) {
    for (std::size_t v = level_begin[l]; v < level_begin[l + 1]; ++v) {
      std::size_t mandatory =
          level_begin[l - 1] + uniform_below(rng, level_sizes[l - 1]);
      raw.edges.emplace_back(mandatory, v);
      for (std::size_t u = level_begin[l - 1]; u < level_begin[l]; ++u) {
        if (u == mandatory) continue;
        if (bernoulli(rng, params.edge_density)) raw.edges.emplace_back(u, v);
      }
    }
  }
  return validate_levels(raw);
}

std::vector<Symbol> gen_pattern(const LevelDag& g, bool planted,
                                std::size_t length, std::uint64_t seed) {
  if (length == 0) throw std::invalid_argument("pattern length must be positive");
  Rng rng(seed);

  if (planted) {
    if (length > g.level_count()) {
      throw std::invalid_argument("planted pattern longer than level count");
    }
    // Walk backwards over in-edges: every non-source node has at least one,
    // so any end node at a deep enough level yields a path.
    std::size_t end_level = length - 1 +
        uniform_below(rng, g.level_count() - length + 1);
    std::size_t v = g.level_begin(end_level) +
        uniform_below(rng, g.level_size(end_level));
    std::vector<std::size_t> path{v};
    for (std::size_t step = 1; step < length; ++step) {
      const auto& nbrs = g.in_neighbors(path.back());
      path.push_back(nbrs[uniform_below(rng, nbrs.size())]);
    }
    std::vector<Symbol> pattern(length);
    for (std::size_t j = 0; j < length; ++j) {
      pattern[j] = g.label(path[length - 1 - j]);
    }
    return pattern;
  }

  Alphabet sigma = g.label_alphabet();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Symbol> pattern(length);
    for (auto& s : pattern) {
      s = sigma.symbol(uniform_below(rng, sigma.size()));
    }
    if (!dp_match(g, pattern).any_full()) return pattern;
  }
  throw GenerationError("could not sample a non-matching pattern");
}

}  // namespace smlg::oracle
