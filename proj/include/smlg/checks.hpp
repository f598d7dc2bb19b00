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

#ifndef SMLG_CHECKS_HPP
#define SMLG_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "smlg/oracle.hpp"
#include "smlg/qgraph.hpp"
#include "smlg/qtext.hpp"

namespace smlg::checks {

struct CheckStats {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // empty while all checks pass

  bool clean() const { return violations == 0; }
};

/// Compares every track's A_j qubit after every text-run iteration against
/// the direct substring predicate, and audits the run's bookkeeping: A_{-1}
/// stays 1, the scratch qubits come back clean, Q stays 1, and I and J
/// advance in lockstep with the iteration count.
class WindowPredicateChecker {
 public:
  WindowPredicateChecker(std::string_view text, std::string_view pattern);

  /// Hook set for TextRunConfig; valid while the checker is alive.
  qtext::TextRunHooks hooks();

  void after_iteration(const qtext::TextRun& run, std::size_t j);

  const CheckStats& stats() const { return stats_; }

 private:
  std::string text_, pattern_;
  CheckStats stats_;
};

/// Compares the graph run's track bits against the reference dynamic
/// program at the two marked checkpoints: each node's V qubit right after
/// operation_two (Invariant 1) and the R chain after every level boundary
/// (Invariant 2), plus scratch cleanliness after every increase_i and the
/// delta form of A and B at every boundary. The reference tables are built
/// from the run itself on first use, so the checker sees whatever instance
/// the engine actually runs (including a padded one).
class InvariantChecker {
 public:
  qgraph::GraphRunHooks hooks();

  void after_operation_two(const qgraph::GraphRun& run, std::size_t node);
  void after_increase_i(const qgraph::GraphRun& run, std::size_t node);
  void after_operation_four(const qgraph::GraphRun& run, std::size_t level);

  const CheckStats& stats() const { return stats_; }

 private:
  void ensure_tables(const qgraph::GraphRun& run);

  std::optional<oracle::DpTable> dp_wide_;   // |P| <= j < m read as wildcards
  std::optional<oracle::DpTable> dp_plain_;
  CheckStats stats_;
};

}  // namespace smlg::checks

#endif
