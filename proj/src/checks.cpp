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

#include "smlg/checks.hpp"

#include <string>

namespace smlg::checks {

namespace {

template <typename Describe>
void note(CheckStats& stats, bool ok, Describe&& describe) {
  ++stats.checks;
  if (!ok) {
    ++stats.violations;
    if (stats.first_violation.empty()) stats.first_violation = describe();
  }
}

}  // namespace

WindowPredicateChecker::WindowPredicateChecker(std::string_view text,
                                 std::string_view pattern)
    : text_(text), pattern_(pattern) {}

qtext::TextRunHooks WindowPredicateChecker::hooks() {
  qtext::TextRunHooks h;
  h.after_iteration = [this](const qtext::TextRun& run, std::size_t j) {
    after_iteration(run, j);
  };
  return h;
}

void WindowPredicateChecker::after_iteration(const qtext::TextRun& run,
                                      std::size_t j) {
  const auto& table = run.table();
  std::size_t n = text_.size();
  auto i_reg = table.register_id("I");
  auto j_reg = table.register_id("J");
  auto q_reg = table.register_id("Q");

  note(stats_, run.scratch_clean(), [&] {
    return "iteration " + std::to_string(j) + ": scratch qubits not clean";
  });
  for (std::size_t t = 0; t < table.track_count(); ++t) {
    std::size_t start = run.start_index(t);
    bool expected = start + j < n;
    for (std::size_t k = 0; expected && k <= j; ++k) {
      expected = text_[start + k] == pattern_[k];
    }
    note(stats_, run.a_bit(static_cast<std::ptrdiff_t>(j), t) == expected,
         [&] {
           return "iteration " + std::to_string(j) + ", track " +
                  std::to_string(t) + ": A_j != substring predicate";
         });
    note(stats_, run.a_bit(-1, t), [&] {
      return "iteration " + std::to_string(j) + ", track " +
             std::to_string(t) + ": A_-1 lost its 1";
    });
    note(stats_, table.register_value(i_reg, t) == start + j + 1, [&] {
      return "iteration " + std::to_string(j) + ", track " +
             std::to_string(t) + ": I out of step";
    });
    note(stats_, table.register_value(j_reg, t) == j + 1, [&] {
      return "iteration " + std::to_string(j) + ", track " +
             std::to_string(t) + ": J out of step";
    });
    note(stats_, table.register_value(q_reg, t) == 1, [&] {
      return "iteration " + std::to_string(j) + ", track " +
             std::to_string(t) + ": Q drifted from 1";
    });
  }
}

qgraph::GraphRunHooks InvariantChecker::hooks() {
  qgraph::GraphRunHooks h;
  h.after_operation_two = [this](const qgraph::GraphRun& run, std::size_t i) {
    after_operation_two(run, i);
  };
  h.after_increase_i = [this](const qgraph::GraphRun& run, std::size_t i) {
    after_increase_i(run, i);
  };
  h.after_operation_four = [this](const qgraph::GraphRun& run,
                                  std::size_t l) {
    after_operation_four(run, l);
  };
  return h;
}

void InvariantChecker::ensure_tables(const qgraph::GraphRun& run) {
  if (dp_wide_) return;
  dp_wide_ = oracle::dp_match_extended(run.dag(), run.pattern(),
                                       run.padded_length());
  dp_plain_ = oracle::dp_match(run.dag(), run.pattern());
}

void InvariantChecker::after_operation_two(const qgraph::GraphRun& run,
                                           std::size_t node) {
  ensure_tables(run);
  for (std::size_t t = 0; t < run.table().track_count(); ++t) {
    std::uint32_t j = run.j_value(t);
    note(stats_, run.v_bit(node, t) == dp_wide_->at(node, j), [&] {
      return "node " + std::to_string(node) + ", prefix length " +
             std::to_string(j + 1) + ": V != dp table (Invariant 1)";
    });
  }
}

void InvariantChecker::after_increase_i(const qgraph::GraphRun& run,
                                        std::size_t node) {
  note(stats_, run.scratch_clean(), [&] {
    return "node " + std::to_string(node) + ": M or C not uncomputed";
  });
  for (std::size_t t = 0; t < run.table().track_count(); ++t) {
    note(stats_, run.i_value(t) == node + 1, [&] {
      return "node " + std::to_string(node) + ", track " + std::to_string(t) +
             ": I out of step";
    });
  }
}

void InvariantChecker::after_operation_four(const qgraph::GraphRun& run,
                                            std::size_t level) {
  ensure_tables(run);
  const auto& g = run.dag();
  std::size_t last = g.level_begin(level) + g.level_size(level) - 1;
  bool any_marked = false;
  for (std::size_t t = 0; t < run.table().track_count(); ++t) {
    if (run.r_bit(last, t)) any_marked = true;
  }
  note(stats_, any_marked == dp_plain_->any_full_up_to(last), [&] {
    return "level " + std::to_string(level) +
           ": R mark does not follow dp_match (Invariant 2)";
  });
  std::uint32_t end = static_cast<std::uint32_t>(run.pattern_length() - 1);
  for (std::size_t t = 0; t < run.table().track_count(); ++t) {
    note(stats_, run.a_bit(t) == (run.j_value(t) == 0), [&] {
      return "level " + std::to_string(level) + ", track " +
             std::to_string(t) + ": A out of delta form";
    });
    note(stats_, run.b_bit(t) == (run.j_value(t) == end), [&] {
      return "level " + std::to_string(level) + ", track " +
             std::to_string(t) + ": B out of delta form";
    });
  }
}

}  // namespace smlg::checks
