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

#ifndef SMLG_GROVER_HPP
#define SMLG_GROVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smlg/qcore.hpp"
#include "smlg/rand.hpp"

namespace smlg::grover {

/// Probability that K amplification iterations starting from the uniform
/// state over N tracks, M of them marked, measure a marked track:
/// sin^2((2K + 1) * asin(sqrt(M / N))).
double success_probability(std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// Iteration count at which the success probability first peaks:
/// (pi / 2) * sqrt(N / M) - 1. Requires 1 <= M <= N.
double period(std::uint64_t n, std::uint64_t m);

/// Failure bound for c rounds with a single marked track: (3/4)^c.
double failure_bound_single(int c);
/// Failure bound for c rounds with any number of marked tracks: (7/8)^c.
double failure_bound(int c);

/// Reference simulation that keeps all N amplitudes: K rounds of sign flip
/// on the marked set followed by inversion about the mean. Returns the total
/// probability mass on the marked set. N is capped at 4096.
double full_grover_oracle(std::uint64_t n, std::span<const std::uint64_t> marked,
                          std::uint64_t k);

enum class KRange {
  /// K uniform over the integers [0, ceil(period(N, 1))].
  kPeriod,
  /// K uniform over [0, pattern_length].
  kPatternLength,
};

struct SearchOptions {
  int budget = 10;  // rounds
  KRange k_range = KRange::kPeriod;
  std::uint64_t pattern_length = 0;  // used by KRange::kPatternLength
  /// Pretend the index register got one extra qubit, doubling N while the
  /// marked set stays put; guarantees M <= N/2.
  bool double_superposition = false;
};

struct SearchOutcome {
  std::optional<std::size_t> measured_track;
  int rounds_used = 0;
  std::vector<std::uint64_t> drawn_k;
};

/// Repeats up to `budget` rounds: draw K, succeed with the analytic
/// probability for (N, count_marked, K), and on success return a uniformly
/// random marked track. Each round charges K + 1 operations (K iterations
/// plus the measurement) to the table's Grover counter.
SearchOutcome run_randomized_search(qcore::TrackTable& table,
                                    qcore::QubitId marked_qubit,
                                    const SearchOptions& options, Rng& rng);

}  // namespace smlg::grover

#endif
