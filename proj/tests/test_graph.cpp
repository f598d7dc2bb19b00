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

#include "smlg/graph.hpp"

#include <stdexcept>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "smlg/errors.hpp"
#include "smlg/oracle.hpp"

using smlg::LevelDag;
using smlg::RawGraph;
using smlg::Symbol;

namespace {

RawGraph chain(std::string_view labels) {
  RawGraph raw;
  raw.labels = smlg::symbols_from_string(labels);
  for (std::size_t i = 0; i + 1 < raw.labels.size(); ++i)
    raw.edges.emplace_back(i, i + 1);
  return raw;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("validate_levels accepts a chain and assigns levels") {
  LevelDag g = smlg::validate_levels(chain("abc"));
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.level_count() == 3);
  CHECK(g.level_of(0) == 0);
  CHECK(g.level_of(2) == 2);
  CHECK(g.label(1) == Symbol{'b'});
  CHECK(g.in_degree(0) == 0);
  CHECK(g.in_degree(1) == 1);
  CHECK(g.in(1, 0) == 0);
  CHECK(g.level_begin(1) == 1);
  CHECK(g.level_size(1) == 1);
}

TEST_CASE("validate_levels rejects cycles and level-skipping edges") {
  RawGraph cycle = chain("ab");
  cycle.edges.emplace_back(1, 0);
  CHECK_THROWS_AS(smlg::validate_levels(cycle), smlg::NotADagError);

  RawGraph skip = chain("abc");
  skip.edges.emplace_back(0, 2);  // jumps from level 0 to level 2
  CHECK_THROWS_AS(smlg::validate_levels(skip), smlg::NotLevelDagError);

  RawGraph empty;
  CHECK_THROWS_AS(smlg::validate_levels(empty), std::invalid_argument);

  RawGraph bad_edge = chain("ab");
  bad_edge.edges.emplace_back(0, 5);
  CHECK_THROWS_AS(smlg::validate_levels(bad_edge), std::invalid_argument);
}

TEST_CASE("validate_levels regroups nodes topologically by level") {
  // Nodes arrive interleaved: a source, a sink, another source.
  RawGraph raw;
  raw.labels = smlg::symbols_from_string("axb");
  raw.edges.emplace_back(0, 1);
  raw.edges.emplace_back(2, 1);
  LevelDag g = smlg::validate_levels(raw);
  CHECK(g.level_count() == 2);
  CHECK(g.level_size(0) == 2);
  CHECK(g.level_size(1) == 1);
  // Relative order within a level is preserved: 'a' before 'b', 'x' last.
  CHECK(g.label(0) == Symbol{'a'});
  CHECK(g.label(1) == Symbol{'b'});
  CHECK(g.label(2) == Symbol{'x'});
  const std::vector<std::size_t>& in = g.in_neighbors(2);
  REQUIRE(in.size() == 2);
  CHECK(in[0] == 0);  // sorted ascending
  CHECK(in[1] == 1);
}

TEST_CASE("out_neighbors mirrors in_neighbors") {
  LevelDag g = smlg::oracle::gen_level_dag({});
  std::vector<std::vector<std::size_t>> out = g.out_neighbors();
  std::size_t edges = 0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (std::size_t d = 0; d + 1 < out[i].size(); ++d)
      CHECK(out[i][d] < out[i][d + 1]);
    edges += out[i].size();
    for (std::size_t dst : out[i]) {
      const std::vector<std::size_t>& back = g.in_neighbors(dst);
      CHECK(std::find(back.begin(), back.end(), i) != back.end());
    }
  }
  CHECK(edges == g.edge_count());
}

TEST_CASE("ldag serialization round trips") {
  LevelDag g = smlg::validate_levels(chain("abca"));
  std::string text = smlg::serialize_ldag(g);
  CHECK(smlg::parse_ldag(text) == g);

  for (const auto& inst : smlg_tests::seeded_corpus(25)) {
    CHECK(smlg::parse_ldag(smlg::serialize_ldag(inst.graph)) == inst.graph);
  }
}

TEST_CASE("parse_ldag reads the documented format with comments") {
  const char* text =
      "# tiny diamond\n"
      "ldag 4 4 3\n"
      "node 0 0 a\n"
      "node 1 1 b\n"
      "node 2 1 int:98\n"
      "node 3 2 c\n"
      "edge 0 1\n"
      "edge 0 2\n"
      "edge 1 3\n"
      "edge 2 3\n";
  LevelDag g = smlg::parse_ldag(text);
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.label(1) == g.label(2));  // int:98 is 'b'
  CHECK(g.level_of(3) == 2);
}

TEST_CASE("parse_ldag reports the offending line") {
  auto line_of = [](const char* text) {
    try {
      smlg::parse_ldag(text);
    } catch (const smlg::ParseError& e) {
      return e.line();
    }
    return std::size_t(-1);
  };
  CHECK(line_of("") == 0);
  CHECK(line_of("ldag x 0 1\n") == 1);
  CHECK(line_of("ldag 1 0 1\nnode 5 0 a\n") == 2);
  CHECK(line_of("ldag 2 1 2\nnode 0 0 a\nnode 1 1 b\nedge 0 9\n") == 4);
  // Declared level disagrees with the computed one.
  CHECK(line_of("ldag 2 1 2\nnode 0 0 a\nnode 1 7 b\nedge 0 1\n") == 3);
  // Wrong counts.
  CHECK(line_of("ldag 2 2 2\nnode 0 0 a\nnode 1 1 b\nedge 0 1\n") != 0);
}

TEST_CASE("degenerate strings become complete level-to-level graphs") {
  LevelDag g = smlg::from_degenerate_string(
      {smlg::symbols_from_string("ab"), smlg::symbols_from_string("c"),
       smlg::symbols_from_string("ab")});
  CHECK(g.node_count() == 5);
  CHECK(g.level_count() == 3);
  CHECK(g.edge_count() == 4);  // 2*1 + 1*2
  CHECK_THROWS_AS(smlg::from_degenerate_string({{}}), std::invalid_argument);
  CHECK_THROWS_AS(smlg::from_degenerate_string({}), std::invalid_argument);
}

TEST_CASE("classical padding preserves the answer exactly") {
  for (const auto& inst : smlg_tests::seeded_corpus(60)) {
    bool original = smlg::oracle::dp_match(inst.graph, inst.pattern).any_full();
    smlg::PaddedInstance padded = smlg::pad_classical(inst.graph, inst.pattern);
    CHECK(smlg_tests::is_power_of_two(padded.pattern.size()));
    CHECK(padded.pattern.size() >= inst.pattern.size());
    bool after = smlg::oracle::dp_match(padded.graph, padded.pattern).any_full();
    CHECK(after == original);
  }
}

TEST_CASE("classical padding rejects sentinel collisions") {
  LevelDag g = smlg::validate_levels(chain("a$b"));
  std::vector<Symbol> p = smlg::symbols_from_string("ab");
  CHECK_THROWS_AS(smlg::pad_classical(g, p), std::invalid_argument);

  LevelDag clean = smlg::validate_levels(chain("abc"));
  std::vector<Symbol> bad = smlg::symbols_from_string("a$");
  CHECK_THROWS_AS(smlg::pad_classical(clean, bad), std::invalid_argument);
  // A different sentinel works.
  CHECK_NOTHROW(smlg::pad_classical(g, p, Symbol{'!'}));
}

TEST_CASE("binary encoding preserves matches") {
  for (const auto& inst : smlg_tests::seeded_corpus(40)) {
    bool original = smlg::oracle::dp_match(inst.graph, inst.pattern).any_full();
    smlg::PaddedInstance encoded = smlg::encode_binary(inst.graph, inst.pattern);
    bool after =
        smlg::oracle::dp_match(encoded.graph, encoded.pattern).any_full();
    // Encoded matches may additionally start mid-chain, so the implication
    // is one-directional.
    if (original) CHECK(after);
  }
}

TEST_CASE("pattern formatting and parsing round trip") {
  CHECK(smlg::format_label('a') == "a");
  CHECK(smlg::format_label(300) == "int:300");
  std::vector<Symbol> p = smlg::parse_pattern_line("abba");
  CHECK(p == smlg::symbols_from_string("abba"));
  std::vector<Symbol> ints = smlg::parse_pattern_line("int:300 int:5");
  REQUIRE(ints.size() == 2);
  CHECK(ints[0] == 300);
  CHECK(ints[1] == 5);
  CHECK(smlg::parse_pattern_line(smlg::format_pattern(ints)) == ints);
  CHECK(smlg::parse_pattern_line(smlg::format_pattern(p)) == p);
  CHECK_THROWS_AS(smlg::parse_pattern_line("int:zz"), smlg::ParseError);
}

TEST_CASE("node accessor bounds are enforced") {
  LevelDag g = smlg::validate_levels(chain("ab"));
  CHECK_THROWS_AS(g.label(2), std::out_of_range);
  CHECK_THROWS_AS(g.level_of(2), std::out_of_range);
  CHECK_THROWS_AS(g.in(0, 0), std::out_of_range);
  CHECK_THROWS_AS(g.level_begin(3), std::out_of_range);
}

TEST_SUITE_END();
