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

#include "smlg/qcore.hpp"

#include <bit>
#include <stdexcept>

#include "smlg/errors.hpp"

namespace smlg::qcore {

namespace {
constexpr std::size_t kWordBits = 64;
constexpr unsigned kMaxRegisterWidth = 30;

std::size_t words_for(std::size_t tracks) {
  return (tracks + kWordBits - 1) / kWordBits;
}
}  // namespace

QubitId TrackTable::declare_qubit(std::string name, bool initial) {
  if (qubit_names_.contains(name) || register_names_.contains(name)) {
    throw std::invalid_argument("name already declared: " + name);
  }
  QubitId id = static_cast<QubitId>(qubits_.size());
  qubits_.push_back({name, std::vector<std::uint64_t>(words_, 0)});
  qubit_names_.emplace(std::move(name), id);
  if (initial) {
    auto& words = qubits_.back().words;
    for (std::size_t t = 0; t < tracks_; ++t) {
      words[t / kWordBits] |= std::uint64_t{1} << (t % kWordBits);
    }
  }
  return id;
}

RegisterId TrackTable::declare_register(std::string name, unsigned width,
                                        std::uint32_t initial) {
  if (qubit_names_.contains(name) || register_names_.contains(name)) {
    throw std::invalid_argument("name already declared: " + name);
  }
  if (width > kMaxRegisterWidth) {
    throw std::invalid_argument("register width too large");
  }
  if (initial >> width) {
    throw std::invalid_argument("initial value exceeds register width");
  }
  RegisterId id = static_cast<RegisterId>(registers_.size());
  registers_.push_back(
      {name, width, std::vector<std::uint32_t>(tracks_, initial)});
  register_names_.emplace(std::move(name), id);
  return id;
}

QubitId TrackTable::qubit_id(std::string_view name) const {
  auto it = qubit_names_.find(std::string(name));
  if (it == qubit_names_.end()) {
    throw std::invalid_argument("unknown qubit: " + std::string(name));
  }
  return it->second;
}

RegisterId TrackTable::register_id(std::string_view name) const {
  auto it = register_names_.find(std::string(name));
  if (it == register_names_.end()) {
    throw std::invalid_argument("unknown register: " + std::string(name));
  }
  return it->second;
}

unsigned TrackTable::register_width(RegisterId r) const {
  return reg(r).width;
}

std::vector<std::uint64_t>& TrackTable::column(QubitId q) {
  if (q >= qubits_.size()) throw std::invalid_argument("unknown qubit id");
  return qubits_[q].words;
}

const std::vector<std::uint64_t>& TrackTable::column(QubitId q) const {
  if (q >= qubits_.size()) throw std::invalid_argument("unknown qubit id");
  return qubits_[q].words;
}

TrackTable::Register& TrackTable::reg(RegisterId r) {
  if (r >= registers_.size()) throw std::invalid_argument("unknown register id");
  return registers_[r];
}

const TrackTable::Register& TrackTable::reg(RegisterId r) const {
  if (r >= registers_.size()) throw std::invalid_argument("unknown register id");
  return registers_[r];
}

void TrackTable::require_clean(QubitId q, const char* op) const {
  if (!qubit_all_zero(q)) {
    throw ScratchNotCleanError(std::string(op) + ": target qubit " +
                               qubits_[q].name + " is not clean");
  }
}

void TrackTable::trace(const char* op, const std::string& args) const {
  if (trace_) {
    trace_("op=" + std::string(op) + " args=" + args +
           " gates=" + std::to_string(gate_count_));
  }
}

void TrackTable::hadamard_init(RegisterId r) {
  Register& target = reg(r);
  if (expanded_) {
    throw std::invalid_argument(
        "hadamard_init: superposition already created");
  }
  if (target.values[0] != 0) {
    throw std::invalid_argument("hadamard_init: register must hold 0");
  }
  std::size_t new_tracks = std::size_t{1} << target.width;
  std::size_t new_words = words_for(new_tracks);

  for (auto& qubit : qubits_) {
    bool bit = qubit.words[0] & 1;
    std::uint64_t fill = bit ? ~std::uint64_t{0} : 0;
    qubit.words.assign(new_words, fill);
    if (bit) {
      std::size_t used = new_tracks % kWordBits;
      if (used != 0) qubit.words.back() = (std::uint64_t{1} << used) - 1;
    }
  }
  for (auto& r2 : registers_) {
    r2.values.assign(new_tracks, r2.values[0]);
  }
  for (std::size_t t = 0; t < new_tracks; ++t) {
    target.values[t] = static_cast<std::uint32_t>(t);
  }
  tracks_ = new_tracks;
  words_ = new_words;
  expanded_ = true;
  bump();
  trace("hadamard_init",
        "reg=" + target.name + ",tracks=" + std::to_string(tracks_));
}

void TrackTable::apply_x(QubitId q) {
  auto& words = column(q);
  for (auto& w : words) w = ~w;
  std::size_t used = tracks_ % kWordBits;
  if (used != 0) words.back() &= (std::uint64_t{1} << used) - 1;
  bump();
  trace("x", "q=" + qubits_[q].name);
}

void TrackTable::apply_cx(QubitId control, QubitId target) {
  if (control == target) {
    throw std::invalid_argument("cx: control and target must differ");
  }
  const auto& c = column(control);
  auto& t = column(target);
  for (std::size_t w = 0; w < words_; ++w) t[w] ^= c[w];
  bump();
  trace("cx",
        "control=" + qubits_[control].name + ",target=" + qubits_[target].name);
}

void TrackTable::apply_ccx(QubitId c1, QubitId c2, QubitId target) {
  if (c1 == target || c2 == target || c1 == c2) {
    throw std::invalid_argument("ccx: qubits must be distinct");
  }
  const auto& a = column(c1);
  const auto& b = column(c2);
  auto& t = column(target);
  for (std::size_t w = 0; w < words_; ++w) t[w] ^= a[w] & b[w];
  bump();
  trace("ccx", "c1=" + qubits_[c1].name + ",c2=" + qubits_[c2].name +
                   ",target=" + qubits_[target].name);
}

void TrackTable::apply_or(QubitId a, QubitId b, QubitId target) {
  if (a == target || b == target || a == b) {
    throw std::invalid_argument("or: qubits must be distinct");
  }
  require_clean(target, "or");
  const auto& wa = column(a);
  const auto& wb = column(b);
  auto& t = column(target);
  for (std::size_t w = 0; w < words_; ++w) t[w] ^= wa[w] | wb[w];
  gate_count_ += 6;
  trace("or", "a=" + qubits_[a].name + ",b=" + qubits_[b].name +
                  ",target=" + qubits_[target].name);
}

void TrackTable::apply_delta_toggle(RegisterId r, std::uint32_t value,
                                    QubitId target) {
  const Register& source = reg(r);
  auto& t = column(target);
  for (std::size_t track = 0; track < tracks_; ++track) {
    if (source.values[track] == value) {
      t[track / kWordBits] ^= std::uint64_t{1} << (track % kWordBits);
    }
  }
  bump();
  trace("delta_toggle", "reg=" + source.name +
                            ",value=" + std::to_string(value) +
                            ",target=" + qubits_[target].name);
}

void TrackTable::apply_delta_init(RegisterId r, std::uint32_t value,
                                  QubitId target) {
  require_clean(target, "delta_init");
  const Register& source = reg(r);
  auto& t = column(target);
  for (std::size_t track = 0; track < tracks_; ++track) {
    if (source.values[track] == value) {
      t[track / kWordBits] ^= std::uint64_t{1} << (track % kWordBits);
    }
  }
  bump();
  trace("delta_init", "reg=" + source.name + ",value=" + std::to_string(value) +
                          ",target=" + qubits_[target].name);
}

void TrackTable::apply_delta_clear(RegisterId r, std::uint32_t value,
                                   QubitId target) {
  const Register& source = reg(r);
  auto& t = column(target);
  for (std::size_t track = 0; track < tracks_; ++track) {
    bool bit = (t[track / kWordBits] >> (track % kWordBits)) & 1;
    if (bit != (source.values[track] == value)) {
      throw StateCorruptionError("delta_clear: qubit " + qubits_[target].name +
                                 " is not in delta form on register " +
                                 source.name);
    }
  }
  for (std::size_t track = 0; track < tracks_; ++track) {
    if (source.values[track] == value) {
      t[track / kWordBits] ^= std::uint64_t{1} << (track % kWordBits);
    }
  }
  bump();
  trace("delta_clear", "reg=" + source.name + ",value=" + std::to_string(value) +
                           ",target=" + qubits_[target].name);
}

void TrackTable::qram_read(RegisterId index, const QramBits& array,
                           QubitId target) {
  const Register& idx = reg(index);
  auto& t = column(target);
  for (std::size_t track = 0; track < tracks_; ++track) {
    std::uint32_t i = idx.values[track];
    std::uint8_t bit =
        i < array.cells.size() ? array.cells[i] : array.pad_value;
    if (bit & 1) {
      t[track / kWordBits] ^= std::uint64_t{1} << (track % kWordBits);
    }
  }
  bump();
  trace("qram_read", "array=" + array.name + ",index=" + idx.name +
                         ",target=" + qubits_[target].name);
}

void TrackTable::qram_read(RegisterId index, const QramWords& array,
                           RegisterId target) {
  const Register& idx = reg(index);
  Register& t = reg(target);
  if (&idx == &t) {
    throw std::invalid_argument("qram_read: index and target must differ");
  }
  if (array.cell_width != t.width) {
    throw std::invalid_argument("qram_read: cell width " +
                                std::to_string(array.cell_width) +
                                " does not match register " + t.name);
  }
  for (std::size_t track = 0; track < tracks_; ++track) {
    std::uint32_t i = idx.values[track];
    std::uint32_t cell = i < array.cells.size() ? array.cells[i] : 0;
    if (cell >> t.width) {
      throw std::invalid_argument("qram_read: cell value exceeds width");
    }
    t.values[track] ^= cell;
  }
  bump();
  trace("qram_read",
        "array=" + array.name + ",index=" + idx.name + ",target=" + t.name);
}

void TrackTable::qram_read(RegisterId row, RegisterId col,
                           const QramBitMatrix& matrix, QubitId target) {
  const Register& r = reg(row);
  const Register& c = reg(col);
  auto& t = column(target);
  for (std::size_t track = 0; track < tracks_; ++track) {
    std::uint32_t ri = r.values[track];
    if (ri >= matrix.rows) {
      throw std::invalid_argument("qram_read: row index out of range");
    }
    if (matrix.at(ri, c.values[track]) & 1) {
      t[track / kWordBits] ^= std::uint64_t{1} << (track % kWordBits);
    }
  }
  bump();
  trace("qram_read", "array=" + matrix.name + ",row=" + r.name +
                         ",col=" + c.name + ",target=" + qubits_[target].name);
}

void TrackTable::apply_mod_init(RegisterId source, std::uint32_t modulus,
                                RegisterId target) {
  const Register& src = reg(source);
  Register& t = reg(target);
  if (&src == &t) {
    throw std::invalid_argument("mod: source and target must differ");
  }
  if (modulus == 0) throw std::invalid_argument("mod: modulus must be positive");
  if ((modulus - 1) >> t.width) {
    throw std::invalid_argument("mod: residues exceed target width");
  }
  for (std::size_t track = 0; track < tracks_; ++track) {
    if (t.values[track] != 0) {
      throw ScratchNotCleanError("mod: target register " + t.name +
                                 " is not clean");
    }
  }
  for (std::size_t track = 0; track < tracks_; ++track) {
    t.values[track] = src.values[track] % modulus;
  }
  bump();
  trace("mod", "source=" + src.name + ",modulus=" + std::to_string(modulus) +
                   ",target=" + t.name);
}

void TrackTable::increment(RegisterId r, RegisterId addend) {
  Register& target = reg(r);
  const Register& one = reg(addend);
  if (&target == &one) {
    throw std::invalid_argument("increment: register and addend must differ");
  }
  for (std::size_t track = 0; track < tracks_; ++track) {
    if (one.values[track] != 1) {
      throw StateCorruptionError("increment: addend register " + one.name +
                                 " does not hold 1");
    }
  }
  std::uint32_t mask = (std::uint32_t{1} << target.width) - 1;
  for (std::size_t track = 0; track < tracks_; ++track) {
    target.values[track] = (target.values[track] + 1) & mask;
  }
  bump();
  trace("increment", "reg=" + target.name + ",addend=" + one.name);
}

std::size_t TrackTable::count_marked(QubitId q) const {
  std::size_t total = 0;
  for (std::uint64_t w : column(q)) total += std::popcount(w);
  return total;
}

std::size_t TrackTable::sample_track(Rng& rng) const {
  return uniform_below(rng, tracks_);
}

bool TrackTable::qubit_bit(QubitId q, std::size_t track) const {
  if (track >= tracks_) throw std::out_of_range("track out of range");
  return (column(q)[track / kWordBits] >> (track % kWordBits)) & 1;
}

std::uint32_t TrackTable::register_value(RegisterId r, std::size_t track) const {
  if (track >= tracks_) throw std::out_of_range("track out of range");
  return reg(r).values[track];
}

bool TrackTable::qubit_all_zero(QubitId q) const {
  for (std::uint64_t w : column(q)) {
    if (w != 0) return false;
  }
  return true;
}

void TrackTable::set_trace(std::function<void(std::string_view)> sink) {
  trace_ = std::move(sink);
}

}  // namespace smlg::qcore
