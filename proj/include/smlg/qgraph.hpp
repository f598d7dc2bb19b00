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

#ifndef SMLG_QGRAPH_HPP
#define SMLG_QGRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "smlg/graph.hpp"
#include "smlg/grover.hpp"
#include "smlg/qcore.hpp"

namespace smlg::qgraph {

/// How patterns whose length is not a power of two are handled: either the
/// extra superposition substates read wildcard matrix entries, or the
/// instance is first rewritten with a sentinel chain so the length becomes a
/// power of two.
enum class PadMode { kSubstates, kClassical };

class GraphRun;

struct GraphRunHooks {
  /// Fires at the point where each node's V qubit is final (Invariant 1).
  std::function<void(const GraphRun&, std::size_t node)> after_operation_two;
  /// Fires after each node's scratch uncomputation and I increment.
  std::function<void(const GraphRun&, std::size_t node)> after_increase_i;
  /// Fires after each level's J increment (Invariant 2); the argument is the
  /// level just completed, starting at 0 for the source level.
  std::function<void(const GraphRun&, std::size_t level)> after_operation_four;
};

/// Gate-level run of the level-DAG matcher. Register J spans one track per
/// value in [0, m), m = |P| rounded up to a power of two, and is incremented
/// once per level, so the prefix evidence for length j always lives on the
/// track whose current J value is j. Per-node qubits V_i accumulate prefix
/// matches, the R chain accumulates full matches across nodes in index
/// order, and R of the last node is the marked qubit.
class GraphRun {
 public:
  /// `pattern` must have at least 2 symbols. Matrix reads at positions at or
  /// beyond |P| return 1, so the padding substates never block and never
  /// reach the full-match filter, which sits at position |P| - 1.
  GraphRun(const LevelDag& g, std::span<const Symbol> pattern,
           GraphRunHooks hooks = {},
           std::function<void(std::string_view)> trace = {});

  const LevelDag& dag() const { return g_; }
  std::span<const Symbol> pattern() const { return pattern_; }
  std::size_t pattern_length() const { return pattern_.size(); }
  /// Track count m.
  std::size_t padded_length() const { return m_; }
  std::size_t shift_count() const { return shift_count_; }

  /// Initializes A and B against J, then sets V of every source node to
  /// "label matches P[0]" on the track whose J is 0.
  void source_nodes_init();
  /// Folds the in-neighbor V qubits through the edge qubits and ORs in A,
  /// leaving the result in V'_i.
  void operation_one(std::size_t i);
  /// V_i := M AND V'_i.
  void operation_two(std::size_t i);
  /// R'_i := V_i AND B; R_i := R'_i OR R_{i-1}.
  void operation_three(std::size_t i);
  /// Uncomputes M and C, then advances I to the next node.
  void increase_i();
  /// Level boundary: clears A and B (verifying their delta form),
  /// increments J in every track, and re-derives A and B from the new J.
  void operation_four();

  /// Full schedule: source_nodes_init, the level-0 boundary, then each
  /// higher level's nodes followed by its boundary, firing hooks throughout.
  void run_levels();

  qcore::TrackTable& table() { return table_; }
  const qcore::TrackTable& table() const { return table_; }
  qcore::QubitId marked_qubit() const { return r_.back(); }

  bool v_bit(std::size_t node, std::size_t track) const;
  bool r_bit(std::size_t node, std::size_t track) const;
  bool a_bit(std::size_t track) const;
  bool b_bit(std::size_t track) const;
  std::uint32_t j_value(std::size_t track) const;
  std::uint32_t i_value(std::size_t track) const;
  /// M and C zero in every track.
  bool scratch_clean() const;

 private:
  void load_label_and_column();
  void unload_label_and_column();
  void fire_after_operation_two(std::size_t i);
  void fire_after_increase_i(std::size_t i);

  const LevelDag& g_;
  std::vector<Symbol> pattern_;
  std::size_t m_;
  std::size_t shift_count_ = 0;
  Alphabet alphabet_;
  GraphRunHooks hooks_;
  qcore::TrackTable table_;
  qcore::QramWords label_words_;
  qcore::QramBitMatrix matrix_;
  qcore::RegisterId j_, i_, c_, q_;
  qcore::QubitId a_, b_, m_qubit_, r_before_first_;
  std::vector<qcore::QubitId> v_, vp_, r_, rp_;
  std::vector<std::vector<qcore::QubitId>> e_;
};

struct GraphRunConfig {
  int budget = 10;
  std::uint64_t seed = 0;
  grover::KRange k_range = grover::KRange::kPeriod;
  bool double_superposition = false;
  PadMode pad_mode = PadMode::kSubstates;
  std::function<void(std::string_view)> trace;
  GraphRunHooks hooks;
};

struct GraphOutcome {
  bool found = false;
  std::optional<std::size_t> measured_track;
  int rounds_used = 0;
  std::size_t marked_tracks = 0;
  std::size_t track_count = 0;
  std::uint64_t gate_ops = 0;
  std::uint64_t grover_ops = 0;
  std::vector<std::uint64_t> drawn_k;
};

/// Full pipeline: optional classical padding, the level schedule, then the
/// randomized amplification rounds on R of the last node. A measured track
/// is verified against the reference dynamic program before being reported.
/// Patterns of length < 2 are rejected; a plain graph scan answers those.
GraphOutcome run_quantum_smlg(const LevelDag& g, std::span<const Symbol> pattern,
                              const GraphRunConfig& config);

}  // namespace smlg::qgraph

#endif
