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
#include <stdexcept>

namespace smlg::grover {

double success_probability(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  if (n == 0) throw std::invalid_argument("track count must be positive");
  if (m > n) throw std::invalid_argument("marked count exceeds track count");
  if (m == 0) return 0.0;
  double theta = std::asin(std::sqrt(static_cast<double>(m) /
                                     static_cast<double>(n)));
  double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
  return s * s;
}

double period(std::uint64_t n, std::uint64_t m) {
  if (m == 0 || m > n) {
    throw std::invalid_argument("marked count must be in [1, n]");
  }
  return std::acos(-1.0) / 2.0 *
             std::sqrt(static_cast<double>(n) / static_cast<double>(m)) -
         1.0;
}

double failure_bound_single(int c) {
  if (c < 0) throw std::invalid_argument("round budget must be nonnegative");
  return std::pow(0.75, c);
}

double failure_bound(int c) {
  if (c < 0) throw std::invalid_argument("round budget must be nonnegative");
  return std::pow(0.875, c);
}

double full_grover_oracle(std::uint64_t n, std::span<const std::uint64_t> marked,
                          std::uint64_t k) {
  if (n == 0 || n > 4096) {
    throw std::invalid_argument("track count must be in [1, 4096]");
  }
  std::vector<bool> is_marked(n, false);
  for (std::uint64_t i : marked) {
    if (i >= n) throw std::invalid_argument("marked index out of range");
    is_marked[i] = true;
  }

  std::vector<double> amp(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (std::uint64_t round = 0; round < k; ++round) {
    for (std::uint64_t i = 0; i < n; ++i) {
      if (is_marked[i]) amp[i] = -amp[i];
    }
    double mean = 0.0;
    for (double a : amp) mean += a;
    mean /= static_cast<double>(n);
    for (double& a : amp) a = 2.0 * mean - a;
  }

  double mass = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (is_marked[i]) mass += amp[i] * amp[i];
  }
  return mass;
}

SearchOutcome run_randomized_search(qcore::TrackTable& table,
                                    qcore::QubitId marked_qubit,
                                    const SearchOptions& options, Rng& rng) {
  if (options.budget < 1) {
    throw std::invalid_argument("round budget must be at least 1");
  }
  std::uint64_t n = table.track_count();
  if (options.double_superposition) n *= 2;
  std::uint64_t m = table.count_marked(marked_qubit);

  std::uint64_t k_hi;
  switch (options.k_range) {
    case KRange::kPeriod:
      k_hi = static_cast<std::uint64_t>(std::ceil(period(n, 1)));
      break;
    case KRange::kPatternLength:
      k_hi = options.pattern_length;
      break;
    default:
      throw std::invalid_argument("bad K range");
  }

  SearchOutcome outcome;
  for (int round = 0; round < options.budget; ++round) {
    std::uint64_t k = uniform_range(rng, 0, k_hi);
    outcome.drawn_k.push_back(k);
    table.add_grover_ops(k + 1);
    outcome.rounds_used = round + 1;
    if (bernoulli(rng, success_probability(n, m, k))) {
      // Measurement collapses onto the marked subspace: the marked tracks
      // share one amplitude, so the result is uniform among them.
      std::uint64_t rank = uniform_below(rng, m);
      for (std::size_t t = 0; t < table.track_count(); ++t) {
        if (table.qubit_bit(marked_qubit, t) && rank-- == 0) {
          outcome.measured_track = t;
          return outcome;
        }
      }
    }
  }
  return outcome;
}

}  // namespace smlg::grover
