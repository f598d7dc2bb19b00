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

#include "smlg/qgraph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "smlg/errors.hpp"
#include "smlg/oracle.hpp"

namespace smlg::qgraph {

GraphRun::GraphRun(const LevelDag& g, std::span<const Symbol> pattern,
                   GraphRunHooks hooks,
                   std::function<void(std::string_view)> trace)
    : g_(g),
      pattern_(pattern.begin(), pattern.end()),
      m_(std::bit_ceil(pattern.size())),
      alphabet_(g.label_alphabet()),
      hooks_(std::move(hooks)) {
  if (pattern_.size() < 2) {
    throw std::invalid_argument("pattern must have at least 2 symbols");
  }
  if (trace) table_.set_trace(std::move(trace));

  unsigned label_width = 1;
  while ((alphabet_.size() - 1) >> label_width) ++label_width;
  label_words_.name = "labels";
  label_words_.cell_width = label_width;
  for (std::size_t i = 0; i < g_.node_count(); ++i) {
    label_words_.cells.push_back(
        static_cast<std::uint32_t>(alphabet_.index_of(g_.label(i))));
  }
  matrix_.name = "match_matrix";
  matrix_.rows = alphabet_.size();
  matrix_.cols = pattern_.size();
  matrix_.pad_value = 1;
  matrix_.cells.resize(matrix_.rows * matrix_.cols);
  for (std::size_t r = 0; r < matrix_.rows; ++r) {
    for (std::size_t c = 0; c < matrix_.cols; ++c) {
      matrix_.cells[r * matrix_.cols + c] =
          alphabet_.symbol(r) == pattern_[c] ? 1 : 0;
    }
  }

  j_ = table_.declare_register("J",
                               static_cast<unsigned>(std::bit_width(m_ - 1)));
  i_ = table_.declare_register(
      "I", static_cast<unsigned>(std::bit_width(g_.node_count())));
  c_ = table_.declare_register("C", label_width);
  q_ = table_.declare_register("Q", 1, 1);
  a_ = table_.declare_qubit("A");
  b_ = table_.declare_qubit("B");
  m_qubit_ = table_.declare_qubit("M");
  r_before_first_ = table_.declare_qubit("R-1");
  for (std::size_t i = 0; i < g_.node_count(); ++i) {
    std::string suffix = std::to_string(i);
    v_.push_back(table_.declare_qubit("V" + suffix));
    vp_.push_back(table_.declare_qubit("Vp" + suffix));
    r_.push_back(table_.declare_qubit("R" + suffix));
    rp_.push_back(table_.declare_qubit("Rp" + suffix));
    e_.emplace_back();
    for (std::size_t d = 0; d < g_.in_degree(i); ++d) {
      e_.back().push_back(
          table_.declare_qubit("E" + suffix + "_" + std::to_string(d)));
    }
  }

  table_.hadamard_init(j_);
}

void GraphRun::load_label_and_column() {
  table_.qram_read(i_, label_words_, c_);
  table_.qram_read(c_, j_, matrix_, m_qubit_);
}

void GraphRun::unload_label_and_column() {
  table_.qram_read(c_, j_, matrix_, m_qubit_);
  table_.qram_read(i_, label_words_, c_);
}

void GraphRun::fire_after_operation_two(std::size_t i) {
  if (hooks_.after_operation_two) hooks_.after_operation_two(*this, i);
}

void GraphRun::fire_after_increase_i(std::size_t i) {
  if (hooks_.after_increase_i) hooks_.after_increase_i(*this, i);
}

void GraphRun::source_nodes_init() {
  table_.apply_delta_init(j_, 0, a_);
  table_.apply_delta_init(j_, static_cast<std::uint32_t>(pattern_.size() - 1),
                          b_);
  for (std::size_t i = 0; i < g_.level_size(0); ++i) {
    load_label_and_column();
    table_.apply_ccx(m_qubit_, a_, v_[i]);
    fire_after_operation_two(i);
    unload_label_and_column();
    table_.increment(i_, q_);
    fire_after_increase_i(i);
  }
}

void GraphRun::operation_one(std::size_t i) {
  const auto& in = g_.in_neighbors(i);
  if (in.empty()) {
    throw std::logic_error("operation_one: node has no in-neighbors");
  }
  load_label_and_column();
  table_.apply_cx(v_[in[0]], e_[i][0]);
  for (std::size_t d = 1; d < in.size(); ++d) {
    table_.apply_or(v_[in[d]], e_[i][d - 1], e_[i][d]);
  }
  table_.apply_or(a_, e_[i].back(), vp_[i]);
}

void GraphRun::operation_two(std::size_t i) {
  if (!table_.qubit_all_zero(v_[i])) {
    throw ScratchNotCleanError("operation_two: target qubit V" +
                               std::to_string(i) + " is not clean");
  }
  table_.apply_ccx(m_qubit_, vp_[i], v_[i]);
}

void GraphRun::operation_three(std::size_t i) {
  if (!table_.qubit_all_zero(rp_[i])) {
    throw ScratchNotCleanError("operation_three: target qubit Rp" +
                               std::to_string(i) + " is not clean");
  }
  table_.apply_ccx(v_[i], b_, rp_[i]);
  qcore::QubitId prev = i == 0 ? r_before_first_ : r_[i - 1];
  table_.apply_or(rp_[i], prev, r_[i]);
}

void GraphRun::increase_i() {
  unload_label_and_column();
  table_.increment(i_, q_);
}

void GraphRun::operation_four() {
  std::uint32_t end = static_cast<std::uint32_t>(pattern_.size() - 1);
  table_.apply_delta_clear(j_, 0, a_);
  table_.apply_delta_clear(j_, end, b_);
  table_.increment(j_, q_);
  table_.apply_delta_init(j_, 0, a_);
  table_.apply_delta_init(j_, end, b_);
  ++shift_count_;
}

void GraphRun::run_levels() {
  source_nodes_init();
  operation_four();
  if (hooks_.after_operation_four) hooks_.after_operation_four(*this, 0);
  for (std::size_t l = 1; l < g_.level_count(); ++l) {
    std::size_t begin = g_.level_begin(l);
    for (std::size_t i = begin; i < begin + g_.level_size(l); ++i) {
      operation_one(i);
      operation_two(i);
      fire_after_operation_two(i);
      operation_three(i);
      increase_i();
      fire_after_increase_i(i);
    }
    operation_four();
    if (hooks_.after_operation_four) hooks_.after_operation_four(*this, l);
  }
}

bool GraphRun::v_bit(std::size_t node, std::size_t track) const {
  return table_.qubit_bit(v_.at(node), track);
}

bool GraphRun::r_bit(std::size_t node, std::size_t track) const {
  return table_.qubit_bit(r_.at(node), track);
}

bool GraphRun::a_bit(std::size_t track) const {
  return table_.qubit_bit(a_, track);
}

bool GraphRun::b_bit(std::size_t track) const {
  return table_.qubit_bit(b_, track);
}

std::uint32_t GraphRun::j_value(std::size_t track) const {
  return table_.register_value(j_, track);
}

std::uint32_t GraphRun::i_value(std::size_t track) const {
  return table_.register_value(i_, track);
}

bool GraphRun::scratch_clean() const {
  if (!table_.qubit_all_zero(m_qubit_)) return false;
  for (std::size_t t = 0; t < table_.track_count(); ++t) {
    if (table_.register_value(c_, t) != 0) return false;
  }
  return true;
}

GraphOutcome run_quantum_smlg(const LevelDag& g,
                              std::span<const Symbol> pattern,
                              const GraphRunConfig& config) {
  if (pattern.size() < 2) {
    throw std::invalid_argument(
        "pattern must have at least 2 symbols; a plain label scan answers "
        "single-symbol patterns");
  }
  std::optional<PaddedInstance> padded;
  const LevelDag* run_g = &g;
  std::span<const Symbol> run_p = pattern;
  if (config.pad_mode == PadMode::kClassical) {
    padded = pad_classical(g, pattern);
    run_g = &padded->graph;
    run_p = padded->pattern;
  }

  GraphRun run(*run_g, run_p, config.hooks, config.trace);
  run.run_levels();

  grover::SearchOptions search;
  search.budget = config.budget;
  search.k_range = config.k_range;
  search.pattern_length = run_p.size();
  search.double_superposition = config.double_superposition;
  Rng rng(config.seed);
  auto sr =
      grover::run_randomized_search(run.table(), run.marked_qubit(), search, rng);

  GraphOutcome out;
  out.marked_tracks = run.table().count_marked(run.marked_qubit());
  out.track_count = run.table().track_count();
  out.rounds_used = sr.rounds_used;
  out.drawn_k = std::move(sr.drawn_k);
  out.gate_ops = run.table().gate_count();
  out.grover_ops = run.table().grover_op_count();
  if (sr.measured_track) {
    // A full match ending at a node of level l leaves its mark on the track
    // whose J was |P|-1 at that level, i.e. track (|P|-1 - l) mod m.
    auto dp = oracle::dp_match(*run_g, run_p);
    std::size_t m = run.padded_length();
    std::size_t last = run_p.size() - 1;
    bool consistent = false;
    for (std::size_t i = 0; i < run_g->node_count() && !consistent; ++i) {
      if (!dp.at(i, last)) continue;
      std::size_t t = (last + m - run_g->level_of(i) % m) % m;
      consistent = t == *sr.measured_track;
    }
    if (!consistent) {
      throw StateCorruptionError("measured track fails verification");
    }
    out.found = true;
    out.measured_track = sr.measured_track;
  }
  return out;
}

}  // namespace smlg::qgraph
