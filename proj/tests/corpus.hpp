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

// Seed-deterministic instance corpus shared by the unit suites and the
// acceptance binary: 500 level DAGs with 8..24 nodes, 3..6 levels, small
// alphabets, and patterns of length 2..8, alternating planted and
// non-planted.

#ifndef SMLG_TESTS_CORPUS_HPP
#define SMLG_TESTS_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "smlg/errors.hpp"
#include "smlg/graph.hpp"
#include "smlg/oracle.hpp"
#include "smlg/rand.hpp"

namespace smlg_tests {

struct CorpusInstance {
  std::size_t id = 0;
  smlg::LevelDag graph;
  std::vector<smlg::Symbol> pattern;
  bool planted = false;
  std::uint64_t seed = 0;  // per-instance seed for randomized engines
};

/// Non-planted sampling can exhaust its retries on tiny dense alphabets;
/// retry with shifted seeds and slightly longer patterns before falling back
/// to a planted pattern. Planted paths cannot outrun the level count, so
/// lengths are clamped to it. Deterministic.
inline std::vector<smlg::Symbol> corpus_pattern(const smlg::LevelDag& g,
                                                bool& planted,
                                                std::size_t length,
                                                std::uint64_t seed) {
  if (planted && length > g.level_count()) length = g.level_count();
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::size_t len = length + (attempt >= 3 ? std::size_t(attempt) - 2 : 0);
    if (len > (planted ? g.level_count() : std::size_t(8))) continue;
    try {
      return smlg::oracle::gen_pattern(g, planted, len, seed + attempt);
    } catch (const smlg::GenerationError&) {
    }
  }
  planted = true;
  std::size_t len = std::min(length, g.level_count());
  return smlg::oracle::gen_pattern(g, true, len, seed);
}

inline std::vector<CorpusInstance> seeded_corpus(
    std::size_t count = 500, std::uint64_t base_seed = 20260815) {
  std::vector<CorpusInstance> corpus;
  corpus.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    smlg::oracle::GenParams params;
    params.node_count = 8 + (k % 17);  // 8..24
    params.level_count = 3 + (k % 4);  // 3..6
    params.edge_density = 0.15 + 0.1 * double(k % 5);
    params.alphabet_size = 2 + (k % 3);  // 2..4
    params.seed = smlg::derive_seed(base_seed, 2 * k);

    CorpusInstance inst;
    inst.id = k;
    inst.graph = smlg::oracle::gen_level_dag(params);
    inst.planted = k % 2 == 0;
    inst.pattern = corpus_pattern(inst.graph, inst.planted, 2 + (k % 7),
                                  smlg::derive_seed(base_seed, 2 * k + 1));
    inst.seed = smlg::derive_seed(base_seed, 1000000 + k);
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

inline bool is_power_of_two(std::size_t v) { return v && (v & (v - 1)) == 0; }

}  // namespace smlg_tests

#endif
