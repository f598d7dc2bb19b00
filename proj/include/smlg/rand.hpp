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

#ifndef SMLG_RAND_HPP
#define SMLG_RAND_HPP

#include <cstdint>
#include <random>

namespace smlg {

// All randomness in the library flows through one named engine so that runs
// are reproducible from a single recorded seed. Bounded draws avoid
// std::uniform_int_distribution, whose output is not pinned by the standard.
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent child seed for sub-task `index` of a run seeded with `base`.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 1));
}

/// Uniform draw from [0, bound). `bound` must be nonzero.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

/// Uniform draw from the inclusive range [lo, hi].
inline std::uint64_t uniform_range(Rng& rng, std::uint64_t lo,
                                   std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

/// Bernoulli trial with success probability `p` (clamped to [0, 1]).
inline bool bernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

}  // namespace smlg

#endif
