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

#include <bit>
#include <stdexcept>

#include "smlg/errors.hpp"

namespace smlg::qtext {

namespace {

std::vector<std::uint8_t> to_bits(std::string_view s, const char* what) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string(what) +
                                  " must be over the alphabet {0, 1}");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

}  // namespace

TextRun::TextRun(std::string_view text, std::string_view pattern,
                 std::function<void(std::string_view)> trace)
    : n_(text.size()), m_(pattern.size()) {
  if (trace) table_.set_trace(std::move(trace));
  if (m_ == 0) throw std::invalid_argument("pattern must be nonempty");
  if (n_ == 0) throw std::invalid_argument("text must be nonempty");
  if (m_ > n_) {
    throw std::invalid_argument("pattern must not be longer than the text");
  }
  text_bits_ = {"T", to_bits(text, "text"), 0};
  pattern_bits_ = {"P", to_bits(pattern, "pattern"), 0};
  valid_bits_ = {"T_valid", std::vector<std::uint8_t>(n_, 1), 0};
  padded_n_ = std::bit_ceil(n_);

  unsigned span_width = static_cast<unsigned>(std::bit_width(padded_n_ - 1));
  i_span_ = table_.declare_register("I_span", span_width);
  i_ = table_.declare_register("I", span_width + 1);
  j_ = table_.declare_register("J", static_cast<unsigned>(std::bit_width(m_)));
  q_ = table_.declare_register("Q", 1, 1);
  a_.push_back(table_.declare_qubit("A-1", true));
  for (std::size_t j = 0; j < m_; ++j) {
    a_.push_back(table_.declare_qubit("A" + std::to_string(j)));
  }
  c_t_ = table_.declare_qubit("C_T");
  c_p_ = table_.declare_qubit("C_P");
  c_v_ = table_.declare_qubit("C_V");
  c_m_ = table_.declare_qubit("C_M");

  table_.hadamard_init(i_span_);
  table_.apply_mod_init(i_span_, static_cast<std::uint32_t>(n_), i_);
}

void TextRun::run_iteration(std::size_t j) {
  if (j != iterations_done_) {
    throw std::invalid_argument("iterations must run in order");
  }
  if (j >= m_) throw std::out_of_range("iteration index out of range");

  table_.qram_read(i_, text_bits_, c_t_);
  table_.qram_read(j_, pattern_bits_, c_p_);
  table_.apply_cx(c_t_, c_p_);
  table_.apply_x(c_p_);
  table_.qram_read(i_, valid_bits_, c_v_);
  table_.apply_ccx(c_p_, c_v_, c_m_);

  table_.apply_ccx(c_m_, a_[j], a_[j + 1]);

  table_.apply_ccx(c_p_, c_v_, c_m_);
  table_.qram_read(i_, valid_bits_, c_v_);
  table_.apply_x(c_p_);
  table_.apply_cx(c_t_, c_p_);
  table_.qram_read(j_, pattern_bits_, c_p_);
  table_.qram_read(i_, text_bits_, c_t_);

  table_.increment(i_, q_);
  table_.increment(j_, q_);
  ++iterations_done_;
}

bool TextRun::a_bit(std::ptrdiff_t j, std::size_t track) const {
  if (j < -1 || j >= static_cast<std::ptrdiff_t>(m_)) {
    throw std::out_of_range("A index out of range");
  }
  return table_.qubit_bit(a_[static_cast<std::size_t>(j + 1)], track);
}

bool TextRun::scratch_clean() const {
  return table_.qubit_all_zero(c_t_) && table_.qubit_all_zero(c_p_) &&
         table_.qubit_all_zero(c_v_) && table_.qubit_all_zero(c_m_);
}

TextOutcome run_quantum_text(std::string_view text, std::string_view pattern,
                             const TextRunConfig& config) {
  TextRun run(text, pattern, config.trace);
  for (std::size_t j = 0; j < run.pattern_length(); ++j) {
    run.run_iteration(j);
    if (config.hooks.after_iteration) config.hooks.after_iteration(run, j);
  }

  grover::SearchOptions search;
  search.budget = config.budget;
  search.k_range = config.k_range;
  search.pattern_length = pattern.size();
  search.double_superposition = config.double_superposition;
  Rng rng(config.seed);
  auto outcome =
      grover::run_randomized_search(run.table(), run.marked_qubit(), search, rng);

  TextOutcome result;
  result.marked_tracks = run.table().count_marked(run.marked_qubit());
  result.track_count = run.table().track_count();
  result.rounds_used = outcome.rounds_used;
  result.drawn_k = std::move(outcome.drawn_k);
  if (outcome.measured_track) {
    std::size_t start = run.start_index(*outcome.measured_track);
    if (text.substr(start, pattern.size()) != pattern) {
      throw StateCorruptionError("measured track fails verification");
    }
    result.found = true;
    result.end_position = start + pattern.size() - 1;
  }
  result.gate_ops = run.table().gate_count();
  result.grover_ops = run.table().grover_op_count();
  return result;
}

}  // namespace smlg::qtext
