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

#include <stdexcept>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "smlg/errors.hpp"
#include "smlg/graph.hpp"

using smlg::LevelDag;
using smlg::Symbol;
using namespace smlg::oracle;

namespace {

LevelDag chain(std::string_view labels) {
  smlg::RawGraph raw;
  raw.labels = smlg::symbols_from_string(labels);
  for (std::size_t i = 0; i + 1 < raw.labels.size(); ++i)
    raw.edges.emplace_back(i, i + 1);
  return smlg::validate_levels(raw);
}

std::vector<Symbol> sym(std::string_view s) {
  return smlg::symbols_from_string(s);
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("dp recurrence by hand on a chain") {
  DpTable yes = dp_match(chain("abc"), sym("bc"));
  CHECK(yes.any_full());
  CHECK(yes.at(2, 1));
  CHECK(yes.at(1, 0));
  CHECK_FALSE(yes.at(0, 0));

  DpTable no = dp_match(chain("abc"), sym("ac"));
  CHECK_FALSE(no.any_full());
  CHECK(no.at(0, 0));  // 'a' prefix matches at node 0
  CHECK_FALSE(no.at(2, 1));
}

TEST_CASE("any_full_up_to scans a growing node prefix") {
  DpTable t = dp_match(chain("aba"), sym("ba"));
  CHECK_FALSE(t.any_full_up_to(1));
  CHECK(t.any_full_up_to(2));
  CHECK_THROWS_AS(t.any_full_up_to(3), std::out_of_range);
}

TEST_CASE("enumeration answers tiny cases definitionally") {
  // A single node has no path of length 2.
  CHECK_FALSE(enumerate_paths_match(chain("a"), sym("aa")));
  // Diamond with equal branch labels agrees with dp either way.
  smlg::RawGraph diamond;
  diamond.labels = sym("abbc");
  diamond.edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  LevelDag g = smlg::validate_levels(diamond);
  for (const char* p : {"abc", "abb", "bc", "ac"}) {
    CHECK(enumerate_paths_match(g, sym(p)) ==
          dp_match(g, sym(p)).any_full());
  }
  // No edges and |P| >= 2 means no.
  smlg::RawGraph lone;
  lone.labels = sym("aa");
  CHECK_FALSE(enumerate_paths_match(smlg::validate_levels(lone), sym("aa")));
}

TEST_CASE("enumeration refuses graphs above its size cap") {
  GenParams params;
  params.node_count = 13;
  params.level_count = 4;
  LevelDag g = gen_level_dag(params);
  CHECK_THROWS_AS(enumerate_paths_match(g, sym("ab")), std::invalid_argument);
  CHECK_NOTHROW(enumerate_paths_match(g, sym("ab"), 13));
}

TEST_CASE("dp agrees with enumeration on small corpus instances") {
  for (const auto& inst : smlg_tests::seeded_corpus(150)) {
    if (inst.graph.node_count() > 12) continue;
    CHECK(dp_match(inst.graph, inst.pattern).any_full() ==
          enumerate_paths_match(inst.graph, inst.pattern));
  }
}

TEST_CASE("extended dp treats positions past the pattern as wildcards") {
  LevelDag g = chain("abca");
  std::vector<Symbol> p = sym("bc");
  DpTable wide = dp_match_extended(g, p, 4);
  DpTable narrow = dp_match(g, p);
  for (std::size_t i = 0; i < g.node_count(); ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(wide.at(i, j) == narrow.at(i, j));
  // Position 2 matches any label wherever position 1 matched a predecessor.
  CHECK(wide.at(3, 2));
  CHECK_FALSE(wide.at(3, 3));  // no predecessor had j=2
  CHECK_FALSE(wide.at(0, 1));  // sources only start prefixes
  CHECK(wide.at(0, 0) == (g.label(0) == p[0]));
  CHECK(dp_match_extended(g, p, 2).at(3, 1) == narrow.at(3, 1));
  CHECK_THROWS_AS(dp_match_extended(g, p, 1), std::invalid_argument);
}

TEST_CASE("naive text matcher returns every end position") {
  CHECK(naive_text_match(sym("abab"), sym("ab")) ==
        std::vector<std::size_t>{1, 3});
  CHECK(naive_text_match(sym("aaa"), sym("aa")) ==
        std::vector<std::size_t>{1, 2});
  CHECK(naive_text_match(sym("ab"), sym("abc")).empty());
  CHECK(naive_text_match(sym("abc"), sym("b")) ==
        std::vector<std::size_t>{1});
}

TEST_CASE("generator is deterministic and respects its parameters") {
  GenParams params;
  params.node_count = 16;
  params.level_count = 5;
  params.edge_density = 0.4;
  params.alphabet_size = 3;
  params.seed = 99;
  LevelDag a = gen_level_dag(params);
  LevelDag b = gen_level_dag(params);
  CHECK(smlg::serialize_ldag(a) == smlg::serialize_ldag(b));
  CHECK(a.node_count() == 16);
  CHECK(a.level_count() == 5);
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    if (a.level_of(i) > 0) CHECK(a.in_degree(i) >= 1);
    CHECK(a.label(i) >= 'a');
    CHECK(a.label(i) < 'a' + 3);
  }
  params.seed = 100;
  CHECK(smlg::serialize_ldag(gen_level_dag(params)) != smlg::serialize_ldag(a));
}

TEST_CASE("generator rejects impossible parameters") {
  GenParams params;
  params.level_count = 1;
  CHECK_THROWS_AS(gen_level_dag(params), std::invalid_argument);
  params.level_count = 20;
  params.node_count = 4;
  CHECK_THROWS_AS(gen_level_dag(params), std::invalid_argument);
  params = {};
  params.edge_density = 1.5;
  CHECK_THROWS_AS(gen_level_dag(params), std::invalid_argument);
  params = {};
  params.alphabet_size = 0;
  CHECK_THROWS_AS(gen_level_dag(params), std::invalid_argument);
}

TEST_CASE("planted patterns always match and rejected ones never do") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams params;
    params.node_count = 14;
    params.level_count = 4;
    params.alphabet_size = 3;
    params.seed = seed;
    LevelDag g = gen_level_dag(params);
    std::vector<Symbol> planted = gen_pattern(g, true, 4, seed);
    CHECK(planted.size() == 4);
    CHECK(dp_match(g, planted).any_full());
    std::vector<Symbol> rejected = gen_pattern(g, false, 4, seed);
    CHECK_FALSE(dp_match(g, rejected).any_full());
  }
}

TEST_CASE("pattern generation fails loudly when everything matches") {
  // Single-letter alphabet: the only pattern of each length always matches
  // along any chain, so rejection sampling must give up.
  GenParams params;
  params.node_count = 6;
  params.level_count = 3;
  params.alphabet_size = 1;
  params.edge_density = 1.0;
  LevelDag g = gen_level_dag(params);
  CHECK_THROWS_AS(gen_pattern(g, false, 2, 0), smlg::GenerationError);
  CHECK_THROWS_AS(gen_pattern(g, true, 0, 0), std::invalid_argument);
}

TEST_SUITE_END();
