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

#include "smlg/qtext.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "smlg/checks.hpp"
#include "smlg/errors.hpp"
#include "smlg/oracle.hpp"
#include "smlg/graph.hpp"

using namespace smlg::qtext;
using smlg::checks::WindowPredicateChecker;

namespace {

std::vector<std::size_t> naive_ends(std::string_view text,
                                    std::string_view pattern) {
  auto t = smlg::symbols_from_string(text);
  auto p = smlg::symbols_from_string(pattern);
  return smlg::oracle::naive_text_match(t, p);
}

/// Runs all iterations of a fresh TextRun, returning it for inspection.
TextRun run_all(std::string_view text, std::string_view pattern) {
  TextRun run(text, pattern);
  for (std::size_t j = 0; j < pattern.size(); ++j) run.run_iteration(j);
  return run;
}

}  // namespace

TEST_SUITE_BEGIN("qtext");

TEST_CASE("construction pads the index range to a power of two") {
  TextRun a("10110100", "101");
  CHECK(a.text_length() == 8);
  CHECK(a.pattern_length() == 3);
  CHECK(a.padded_length() == 8);
  CHECK(a.table().track_count() == 8);

  TextRun b("10110", "10");
  CHECK(b.padded_length() == 8);
  CHECK(b.table().track_count() == 8);
  CHECK(b.start_index(6) == 1);  // wrapped start
  CHECK(b.start_index(4) == 4);

  for (std::size_t t = 0; t < 8; ++t) {
    CHECK(a.a_bit(-1, t));   // the chain anchor starts raised
    CHECK_FALSE(a.a_bit(0, t));
  }
  CHECK(a.scratch_clean());
}

TEST_CASE("construction validates text and pattern") {
  CHECK_THROWS_AS(TextRun("01a1", "01"), std::invalid_argument);
  CHECK_THROWS_AS(TextRun("0101", "2"), std::invalid_argument);
  CHECK_THROWS_AS(TextRun("", "0"), std::invalid_argument);
  CHECK_THROWS_AS(TextRun("0101", ""), std::invalid_argument);
  CHECK_THROWS_AS(TextRun("01", "011"), std::invalid_argument);
}

TEST_CASE("iterations run strictly in order") {
  TextRun run("0110", "01");
  CHECK_THROWS_AS(run.run_iteration(1), std::invalid_argument);
  run.run_iteration(0);
  CHECK_THROWS_AS(run.run_iteration(0), std::invalid_argument);
  run.run_iteration(1);
  CHECK(run.iterations_done() == 2);
  CHECK_THROWS_AS(run.run_iteration(2), std::out_of_range);
  CHECK_THROWS_AS(run.a_bit(2, 0), std::out_of_range);
  CHECK_THROWS_AS(run.a_bit(-2, 0), std::out_of_range);
}

TEST_CASE("the final chain qubit marks exactly the matching windows") {
  std::string text = "0110101";
  std::string pattern = "101";
  TextRun run = run_all(text, pattern);
  REQUIRE(run.table().track_count() == 8);
  for (std::size_t t = 0; t < 8; ++t) {
    std::size_t start = run.start_index(t);
    bool expect = start + pattern.size() <= text.size() &&
                  text.substr(start, pattern.size()) == pattern;
    CAPTURE(t);
    CHECK(run.a_bit(2, t) == expect);
  }
  CHECK(run.table().count_marked(run.marked_qubit()) == 2);  // starts 2 and 4
  CHECK(run.scratch_clean());
}

TEST_CASE("per-iteration chain bits track the partial matches") {
  std::string text = "110100";
  std::string pattern = "010";
  TextRun run("110100", "010");
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    run.run_iteration(j);
    for (std::size_t t = 0; t < run.table().track_count(); ++t) {
      std::size_t start = run.start_index(t);
      bool expect = start + j + 1 <= text.size() &&
                    text.substr(start, j + 1) == pattern.substr(0, j + 1);
      CAPTURE(j);
      CAPTURE(t);
      CHECK(run.a_bit(static_cast<std::ptrdiff_t>(j), t) == expect);
    }
    CHECK(run.scratch_clean());
  }
}

TEST_CASE("the window predicate checker passes exhaustively on tiny inputs") {
  std::uint64_t checks = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t tv = 0; tv < (1u << n); ++tv) {
      std::string text;
      for (std::size_t i = 0; i < n; ++i) {
        text.push_back((tv >> i) & 1 ? '1' : '0');
      }
      for (std::size_t m = 1; m <= n; ++m) {
        for (std::uint32_t pv = 0; pv < (1u << m); ++pv) {
          std::string pattern;
          for (std::size_t i = 0; i < m; ++i) {
            pattern.push_back((pv >> i) & 1 ? '1' : '0');
          }
          WindowPredicateChecker checker(text, pattern);
          TextRun run(text, pattern, {});
          for (std::size_t j = 0; j < m; ++j) {
            run.run_iteration(j);
            checker.after_iteration(run, j);
          }
          REQUIRE_MESSAGE(checker.stats().clean(),
                          checker.stats().first_violation);
          checks += checker.stats().checks;
        }
      }
    }
  }
  CHECK(checks > 1000);
}

TEST_CASE("full pipeline finds a planted pattern and verifies the position") {
  std::string text = "0011010011010010";
  std::string pattern = "10100";
  std::vector<std::size_t> ends = naive_ends(text, pattern);
  REQUIRE_FALSE(ends.empty());
  int found = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    TextRunConfig config;
    config.seed = seed;
    TextOutcome out = run_quantum_text(text, pattern, config);
    CHECK(out.track_count == 16);
    CHECK(out.marked_tracks == ends.size());
    if (out.found) {
      REQUIRE(out.end_position.has_value());
      bool valid_end = false;
      for (std::size_t e : ends) valid_end |= (e == *out.end_position);
      CHECK(valid_end);
      ++found;
    }
  }
  // Failure probability is at most (7/8)^10 ~ 0.26 per seed.
  CHECK(found >= 15);
}

TEST_CASE("an absent pattern burns the whole budget and reports nothing") {
  TextRunConfig config;
  config.budget = 6;
  config.seed = 11;
  TextOutcome out = run_quantum_text("00000000", "111", config);
  CHECK_FALSE(out.found);
  CHECK_FALSE(out.end_position.has_value());
  CHECK(out.marked_tracks == 0);
  CHECK(out.rounds_used == 6);
  CHECK(out.drawn_k.size() == 6);
}

TEST_CASE("gate and amplification accounting follow the circuit shape") {
  for (std::string_view pattern : {"1", "10", "1011", "10110"}) {
    TextRunConfig config;
    config.seed = 3;
    config.budget = 4;
    TextOutcome out = run_quantum_text("10110110", pattern, config);
    // Superposition setup, index fold, then 15 operations per iteration.
    CHECK(out.gate_ops == 2 + 15 * pattern.size());
    std::uint64_t expected = 0;
    for (std::uint64_t k : out.drawn_k) expected += k + 1;
    CHECK(out.grover_ops == expected);
  }
}

TEST_CASE("pattern-length amplification draws stay within the pattern size") {
  TextRunConfig config;
  config.seed = 9;
  config.budget = 30;
  config.k_range = smlg::grover::KRange::kPatternLength;
  TextOutcome out = run_quantum_text("00000000", "101", config);
  for (std::uint64_t k : out.drawn_k) CHECK(k <= 3);
}

TEST_CASE("trace sees one line per operation in the advertised format") {
  std::vector<std::string> lines;
  TextRunConfig config;
  config.seed = 1;
  config.trace = [&](std::string_view line) { lines.emplace_back(line); };
  run_quantum_text("0110", "11", config);
  CHECK(lines.size() == 2 + 15 * 2);
  for (const std::string& line : lines) {
    CAPTURE(line);
    CHECK(line.rfind("op=", 0) == 0);
    CHECK(line.find(" gates=") != std::string::npos);
  }
}

TEST_CASE("the after-iteration hook fires once per iteration") {
  int fired = 0;
  TextRunConfig config;
  config.hooks.after_iteration = [&](const TextRun& run, std::size_t j) {
    CHECK(run.iterations_done() == j + 1);
    ++fired;
  };
  run_quantum_text("101101", "011", config);
  CHECK(fired == 3);
}

TEST_SUITE_END();
