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

#ifndef SMLG_QTEXT_HPP
#define SMLG_QTEXT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "smlg/grover.hpp"
#include "smlg/qcore.hpp"

namespace smlg::qtext {

/// Gate-level run of the plain-text matcher over a binary alphabet. One
/// track per padded start index; track t searches from start position
/// t mod |T|. After iteration j, qubit A_j is 1 on exactly the tracks whose
/// window matches P[0..j] inside the text.
class TextRun {
 public:
  /// `text` and `pattern` must be nonempty strings over {'0', '1'} with
  /// |pattern| <= |text|. The trace sink, if any, sees every gate including
  /// the initial superposition setup.
  TextRun(std::string_view text, std::string_view pattern,
          std::function<void(std::string_view)> trace = {});

  std::size_t text_length() const { return n_; }
  std::size_t pattern_length() const { return m_; }
  std::size_t padded_length() const { return padded_n_; }

  /// Runs iteration j (0-based); iterations must be run in order.
  void run_iteration(std::size_t j);
  std::size_t iterations_done() const { return iterations_done_; }

  qcore::TrackTable& table() { return table_; }
  const qcore::TrackTable& table() const { return table_; }

  /// A_j for j in [-1, m-1].
  bool a_bit(std::ptrdiff_t j, std::size_t track) const;
  qcore::QubitId marked_qubit() const { return a_.back(); }
  std::size_t start_index(std::size_t track) const { return track % n_; }
  /// All four scratch qubits zero in every track.
  bool scratch_clean() const;

 private:
  std::size_t n_, m_, padded_n_;
  std::size_t iterations_done_ = 0;
  qcore::TrackTable table_;
  qcore::QramBits text_bits_, pattern_bits_, valid_bits_;
  qcore::RegisterId i_span_, i_, j_, q_;
  std::vector<qcore::QubitId> a_;  // a_[j + 1] holds A_j
  qcore::QubitId c_t_, c_p_, c_v_, c_m_;
};

struct TextRunHooks {
  std::function<void(const TextRun&, std::size_t j)> after_iteration;
};

struct TextRunConfig {
  int budget = 10;
  std::uint64_t seed = 0;
  grover::KRange k_range = grover::KRange::kPeriod;
  bool double_superposition = false;
  std::function<void(std::string_view)> trace;
  TextRunHooks hooks;
};

struct TextOutcome {
  bool found = false;
  std::optional<std::size_t> end_position;
  int rounds_used = 0;
  std::size_t marked_tracks = 0;
  std::size_t track_count = 0;
  std::uint64_t gate_ops = 0;
  std::uint64_t grover_ops = 0;
  std::vector<std::uint64_t> drawn_k;
};

/// Full pipeline: simulate all m iterations, then the randomized
/// amplification rounds. A reported end position is verified against the
/// text before being returned.
TextOutcome run_quantum_text(std::string_view text, std::string_view pattern,
                             const TextRunConfig& config);

}  // namespace smlg::qtext

#endif
