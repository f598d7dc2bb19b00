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

#ifndef SMLG_QCORE_HPP
#define SMLG_QCORE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "smlg/rand.hpp"

namespace smlg::qcore {

using QubitId = std::uint32_t;
using RegisterId = std::uint32_t;

/// Classical memory readable in superposition: target ^= cells[index], with
/// `pad_value` standing in for cells beyond the array. Reading the same cell
/// twice restores the target.
struct QramBits {
  std::string name;
  std::vector<std::uint8_t> cells;
  std::uint8_t pad_value = 0;
};

/// Word-valued variant; cell values must fit the target register's width.
struct QramWords {
  std::string name;
  std::vector<std::uint32_t> cells;
  unsigned cell_width = 1;
};

/// Bit matrix addressed by a (row, column) register pair. Columns at or
/// beyond `cols` read as `pad_value`; rows must stay in range.
struct QramBitMatrix {
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;  // rows * cols, row-major
  std::uint8_t pad_value = 0;

  std::uint8_t at(std::size_t r, std::size_t c) const {
    return c >= cols ? pad_value : cells[r * cols + c];
  }
};

/// Simulator for the restricted circuits used here: one uniform-amplitude
/// superposition over an index register, followed by gates that permute
/// classical basis states. Each basis state is one "track"; a track stores a
/// classical value for every declared qubit and register, and all amplitudes
/// stay equal, so they are never materialized.
///
/// Gate helpers count one operation each; apply_or counts the six primitive
/// gates of its De Morgan expansion. Grover work is accounted separately via
/// add_grover_ops.
class TrackTable {
 public:
  TrackTable() = default;

  QubitId declare_qubit(std::string name, bool initial = false);
  RegisterId declare_register(std::string name, unsigned width,
                              std::uint32_t initial = 0);

  QubitId qubit_id(std::string_view name) const;
  RegisterId register_id(std::string_view name) const;
  unsigned register_width(RegisterId r) const;

  std::size_t track_count() const { return tracks_; }

  /// Expands the single existing track into one per register value,
  /// 0..2^width-1, copying all other cells. The register must hold 0 and the
  /// table must not have been expanded yet.
  void hadamard_init(RegisterId r);

  void apply_x(QubitId q);
  void apply_cx(QubitId control, QubitId target);
  void apply_ccx(QubitId c1, QubitId c2, QubitId target);

  /// target := a OR b via X(a) X(b) CCX X(target) X(a) X(b). The target must
  /// be 0 in every track; counts 6 gates.
  void apply_or(QubitId a, QubitId b, QubitId target);

  /// target ^= (reg == value), a generalized Toffoli on the register's
  /// qubits. apply_delta_init demands a clean target; apply_delta_clear
  /// demands that the target equal the delta exactly (and so zeroes it);
  /// apply_delta_toggle applies the bare XOR semantics.
  void apply_delta_init(RegisterId reg, std::uint32_t value, QubitId target);
  void apply_delta_clear(RegisterId reg, std::uint32_t value, QubitId target);
  void apply_delta_toggle(RegisterId reg, std::uint32_t value, QubitId target);

  void qram_read(RegisterId index, const QramBits& array, QubitId target);
  void qram_read(RegisterId index, const QramWords& array, RegisterId target);
  void qram_read(RegisterId row, RegisterId col, const QramBitMatrix& matrix,
                 QubitId target);

  /// target ^= source % modulus. The target must be 0 in every track.
  void apply_mod_init(RegisterId source, std::uint32_t modulus,
                      RegisterId target);

  /// reg := reg + 1 mod 2^width. The addend register must hold 1 in every
  /// track.
  void increment(RegisterId reg, RegisterId addend);

  std::size_t count_marked(QubitId q) const;
  /// Index measurement: uniform over tracks.
  std::size_t sample_track(Rng& rng) const;

  bool qubit_bit(QubitId q, std::size_t track) const;
  std::uint32_t register_value(RegisterId r, std::size_t track) const;
  bool qubit_all_zero(QubitId q) const;

  std::uint64_t gate_count() const { return gate_count_; }
  std::uint64_t grover_op_count() const { return grover_ops_; }
  void add_grover_ops(std::uint64_t n) { grover_ops_ += n; }

  /// One line per operation: "op=<name> args=<...> gates=<running count>".
  void set_trace(std::function<void(std::string_view)> sink);

 private:
  struct QubitColumn {
    std::string name;
    std::vector<std::uint64_t> words;  // bit per track
  };
  struct Register {
    std::string name;
    unsigned width;
    std::vector<std::uint32_t> values;  // value per track
  };

  std::vector<std::uint64_t>& column(QubitId q);
  const std::vector<std::uint64_t>& column(QubitId q) const;
  Register& reg(RegisterId r);
  const Register& reg(RegisterId r) const;
  void require_clean(QubitId q, const char* op) const;
  void trace(const char* op, const std::string& args) const;
  void bump() { ++gate_count_; }

  std::size_t tracks_ = 1;
  std::size_t words_ = 1;
  bool expanded_ = false;
  std::vector<QubitColumn> qubits_;
  std::vector<Register> registers_;
  std::unordered_map<std::string, QubitId> qubit_names_;
  std::unordered_map<std::string, RegisterId> register_names_;
  std::uint64_t gate_count_ = 0;
  std::uint64_t grover_ops_ = 0;
  std::function<void(std::string_view)> trace_;
};

}  // namespace smlg::qcore

#endif
