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

#ifndef SMLG_BITVEC_HPP
#define SMLG_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smlg {

/// Node labels and pattern characters. Single-character labels are stored as
/// their byte value; integer labels are stored as-is.
using Symbol = std::int32_t;

std::vector<Symbol> symbols_from_string(std::string_view s);

/// Fixed-length vector of bits packed into 64-bit words. Bit 0 is the least
/// significant bit of word 0. Binary operators require equal lengths.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  /// Parses "1010..." with the most significant (highest-index) bit first,
  /// mirroring how the vectors are printed.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);

  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  BitVector operator&(const BitVector& other) const;
  BitVector operator|(const BitVector& other) const;
  BitVector operator~() const;

  /// Shift toward higher bit indices; bits shifted past size() are dropped.
  BitVector shl(std::size_t k) const;
  /// Shift toward lower bit indices; zero fill from the top.
  BitVector shr(std::size_t k) const;

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  bool operator==(const BitVector& other) const;
  bool operator!=(const BitVector& other) const { return !(*this == other); }

  /// Highest-index bit first, matching from_string.
  std::string to_string() const;

 private:
  void check_same_length(const BitVector& other) const;
  void clear_padding();

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Ordered set of symbols. Symbols are kept sorted and deduplicated; the
/// index of a symbol is its rank within the set.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> symbols);

  static Alphabet from_string(std::string_view chars);

  std::size_t size() const { return symbols_.size(); }
  Symbol symbol(std::size_t index) const;
  bool contains(Symbol s) const;
  /// Rank of `s`; throws std::invalid_argument if absent.
  std::size_t index_of(Symbol s) const;

  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Per-symbol match columns for a pattern P: column(c) has bit j set iff
/// P[j] == c. Every pattern character must belong to the alphabet.
class MatchMatrix {
 public:
  MatchMatrix(std::span<const Symbol> pattern, const Alphabet& alphabet);

  std::size_t pattern_length() const { return m_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const BitVector& column(Symbol s) const;
  const BitVector& column_at(std::size_t alphabet_index) const;
  /// Entry m[c][j] == (P[j] == c).
  bool at(Symbol s, std::size_t j) const { return column(s).get(j); }

 private:
  std::size_t m_ = 0;
  Alphabet alphabet_;
  std::vector<BitVector> columns_;
};

}  // namespace smlg

#endif
