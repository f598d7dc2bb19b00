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

#include "smlg/grover.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "smlg/qcore.hpp"
#include "smlg/rand.hpp"

using namespace smlg::grover;
using smlg::qcore::QubitId;
using smlg::qcore::RegisterId;
using smlg::qcore::TrackTable;

namespace {

/// Width-w uniform table with the tracks in `marked` flagged on qubit "hit".
struct Fixture {
  TrackTable table;
  QubitId hit;

  Fixture(unsigned width, const std::vector<std::uint32_t>& marked) {
    RegisterId idx = table.declare_register("idx", width);
    hit = table.declare_qubit("hit");
    table.hadamard_init(idx);
    for (std::uint32_t value : marked) {
      table.apply_delta_toggle(idx, value, hit);
    }
  }
};

}  // namespace

TEST_SUITE_BEGIN("grover");

TEST_CASE("success probability hits known closed-form points") {
  // N=4, M=1: one iteration is exact.
  CHECK(success_probability(4, 1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(success_probability(4, 1, 0) == doctest::Approx(0.25));
  // Zero iterations always measure uniformly.
  CHECK(success_probability(16, 4, 0) == doctest::Approx(0.25));
  // Saturated marked set succeeds regardless of K.
  for (std::uint64_t k = 0; k < 5; ++k) {
    CHECK(success_probability(8, 8, k) == doctest::Approx(1.0));
  }
  CHECK(success_probability(8, 0, 3) == 0.0);
  CHECK_THROWS_AS(success_probability(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(success_probability(4, 5, 1), std::invalid_argument);
}

TEST_CASE("period matches the closed form") {
  CHECK(period(4, 1) == doctest::Approx(std::acos(-1.0) - 1.0));
  CHECK(period(4, 4) == doctest::Approx(std::acos(-1.0) / 2.0 - 1.0));
  CHECK_THROWS_AS(period(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(period(4, 5), std::invalid_argument);
}

TEST_CASE("failure bounds are the advertised powers") {
  CHECK(failure_bound(10) == doctest::Approx(0.26307558).epsilon(1e-6));
  CHECK(failure_bound_single(10) == doctest::Approx(0.05631351).epsilon(1e-6));
  CHECK(failure_bound(0) == 1.0);
  CHECK_THROWS_AS(failure_bound(-1), std::invalid_argument);
  CHECK_THROWS_AS(failure_bound_single(-1), std::invalid_argument);
}

TEST_CASE("analytic probability matches the amplitude simulation") {
  for (std::uint64_t n : {2, 4, 8, 16, 32, 64}) {
    for (std::uint64_t m = 1; m <= n; m += (n > 16 ? 5 : 1)) {
      std::vector<std::uint64_t> marked(m);
      std::iota(marked.begin(), marked.end(), 0);
      for (std::uint64_t k = 0; k <= 12; ++k) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(k);
        CHECK(std::abs(full_grover_oracle(n, marked, k) -
                       success_probability(n, m, k)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("amplitude simulation validates its inputs") {
  std::vector<std::uint64_t> marked{0};
  CHECK_THROWS_AS(full_grover_oracle(0, marked, 1), std::invalid_argument);
  CHECK_THROWS_AS(full_grover_oracle(8192, marked, 1), std::invalid_argument);
  std::vector<std::uint64_t> oor{9};
  CHECK_THROWS_AS(full_grover_oracle(8, oor, 1), std::invalid_argument);
}

TEST_CASE("search rejects an empty budget") {
  Fixture f(2, {1});
  smlg::Rng rng(1);
  SearchOptions options;
  options.budget = 0;
  CHECK_THROWS_AS(run_randomized_search(f.table, f.hit, options, rng),
                  std::invalid_argument);
}

TEST_CASE("searching an unmarked table exhausts the budget") {
  Fixture f(3, {});
  smlg::Rng rng(20260815);
  SearchOptions options;
  options.budget = 7;
  SearchOutcome out = run_randomized_search(f.table, f.hit, options, rng);
  CHECK_FALSE(out.measured_track.has_value());
  CHECK(out.rounds_used == 7);
  REQUIRE(out.drawn_k.size() == 7);
  // ceil(period(8, 1)) = ceil(pi/2 * sqrt(8) - 1) = 4.
  std::uint64_t expected_ops = 0;
  for (std::uint64_t k : out.drawn_k) {
    CHECK(k <= 4);
    expected_ops += k + 1;
  }
  CHECK(f.table.grover_op_count() == expected_ops);
}

TEST_CASE("a fully marked table succeeds on the first round") {
  TrackTable table;
  RegisterId idx = table.declare_register("idx", 2);
  QubitId hit = table.declare_qubit("hit", true);
  table.hadamard_init(idx);
  smlg::Rng rng(5);
  SearchOutcome out = run_randomized_search(table, hit, SearchOptions{}, rng);
  CHECK(out.rounds_used == 1);
  REQUIRE(out.measured_track.has_value());
  CHECK(table.grover_op_count() == out.drawn_k.at(0) + 1);
}

TEST_CASE("pattern-length K range bounds the drawn iteration counts") {
  Fixture f(3, {});
  smlg::Rng rng(3);
  SearchOptions options;
  options.budget = 40;
  options.k_range = KRange::kPatternLength;
  options.pattern_length = 5;
  SearchOutcome out = run_randomized_search(f.table, f.hit, options, rng);
  std::uint64_t max_k = 0;
  for (std::uint64_t k : out.drawn_k) max_k = std::max(max_k, k);
  CHECK(max_k <= 5);
  CHECK(max_k >= 4);  // 40 draws from [0,5] reach the top with cert. ~1
}

TEST_CASE("doubling the superposition halves a saturated success rate") {
  int multi_round = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TrackTable table;
    RegisterId idx = table.declare_register("idx", 2);
    QubitId hit = table.declare_qubit("hit", true);
    table.hadamard_init(idx);
    SearchOptions options;
    options.double_superposition = true;
    smlg::Rng rng(seed);
    SearchOutcome out = run_randomized_search(table, hit, options, rng);
    if (out.measured_track.has_value() && out.rounds_used > 1) ++multi_round;
  }
  // Success probability is exactly 1/2 per round, so about half the seeds
  // need at least a second round.
  CHECK(multi_round > 60);
  CHECK(multi_round < 140);
}

TEST_CASE("single-round success rate tracks the K-averaged analytic value") {
  // N=8, M=1, K uniform over [0,4]: mean success probability ~0.439.
  int hits = 0;
  const int trials = 4000;
  smlg::Rng rng(20260815);
  for (int trial = 0; trial < trials; ++trial) {
    Fixture f(3, {5});
    SearchOptions options;
    options.budget = 1;
    SearchOutcome out = run_randomized_search(f.table, f.hit, options, rng);
    if (out.measured_track.has_value()) {
      CHECK(*out.measured_track == 5);
      ++hits;
    }
  }
  double rate = double(hits) / trials;
  CHECK(rate > 0.39);
  CHECK(rate < 0.49);
}

TEST_CASE("measurements stay inside the marked set and cover it") {
  std::set<std::size_t> seen;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Fixture f(3, {1, 3, 6});
    smlg::Rng rng(100 + seed);
    SearchOutcome out = run_randomized_search(f.table, f.hit, SearchOptions{},
                                              rng);
    if (out.measured_track.has_value()) {
      CHECK((*out.measured_track == 1 || *out.measured_track == 3 ||
             *out.measured_track == 6));
      seen.insert(*out.measured_track);
    }
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("identical seeds reproduce the whole outcome") {
  auto run = [](std::uint64_t seed) {
    Fixture f(4, {2, 9});
    smlg::Rng rng(seed);
    SearchOptions options;
    options.budget = 6;
    return run_randomized_search(f.table, f.hit, options, rng);
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SearchOutcome a = run(seed);
    SearchOutcome b = run(seed);
    CHECK(a.drawn_k == b.drawn_k);
    CHECK(a.rounds_used == b.rounds_used);
    CHECK(a.measured_track == b.measured_track);
  }
}

TEST_SUITE_END();
