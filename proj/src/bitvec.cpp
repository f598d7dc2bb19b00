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

#include "smlg/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace smlg {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t length) {
  return (length + kWordBits - 1) / kWordBits;
}
}  // namespace

std::vector<Symbol> symbols_from_string(std::string_view s) {
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (unsigned char ch : s) out.push_back(static_cast<Symbol>(ch));
  return out;
}

BitVector::BitVector(std::size_t length)
    : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[bits.size() - 1 - i];
    if (c == '1') {
      v.set(i);
    } else if (c != '0') {
      throw std::invalid_argument("bit string may contain only 0 and 1");
    }
  }
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("bit index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("bit index out of range");
  std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::check_same_length(const BitVector& other) const {
  if (length_ != other.length_) {
    throw std::invalid_argument("bit vector lengths differ");
  }
}

void BitVector::clear_padding() {
  std::size_t used = length_ % kWordBits;
  if (used != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << used) - 1;
  }
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_length(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

BitVector BitVector::operator&(const BitVector& other) const {
  BitVector result = *this;
  result &= other;
  return result;
}

BitVector BitVector::operator|(const BitVector& other) const {
  BitVector result = *this;
  result |= other;
  return result;
}

BitVector BitVector::operator~() const {
  BitVector result = *this;
  for (auto& w : result.words_) w = ~w;
  result.clear_padding();
  return result;
}

BitVector BitVector::shl(std::size_t k) const {
  BitVector result(length_);
  if (k >= length_) return result;
  std::size_t word_shift = k / kWordBits;
  std::size_t bit_shift = k % kWordBits;
  for (std::size_t w = words_.size(); w-- > word_shift;) {
    std::uint64_t v = words_[w - word_shift] << bit_shift;
    if (bit_shift != 0 && w > word_shift) {
      v |= words_[w - word_shift - 1] >> (kWordBits - bit_shift);
    }
    result.words_[w] = v;
  }
  result.clear_padding();
  return result;
}

BitVector BitVector::shr(std::size_t k) const {
  BitVector result(length_);
  if (k >= length_) return result;
  std::size_t word_shift = k / kWordBits;
  std::size_t bit_shift = k % kWordBits;
  for (std::size_t w = 0; w + word_shift < words_.size(); ++w) {
    std::uint64_t v = words_[w + word_shift] >> bit_shift;
    if (bit_shift != 0 && w + word_shift + 1 < words_.size()) {
      v |= words_[w + word_shift + 1] << (kWordBits - bit_shift);
    }
    result.words_[w] = v;
  }
  return result;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool BitVector::operator==(const BitVector& other) const {
  return length_ == other.length_ && words_ == other.words_;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[length_ - 1 - i] = '1';
  }
  return s;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()),
                 symbols_.end());
}

Alphabet Alphabet::from_string(std::string_view chars) {
  return Alphabet(symbols_from_string(chars));
}

Symbol Alphabet::symbol(std::size_t index) const {
  if (index >= symbols_.size()) {
    throw std::out_of_range("alphabet index out of range");
  }
  return symbols_[index];
}

bool Alphabet::contains(Symbol s) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

std::size_t Alphabet::index_of(Symbol s) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || *it != s) {
    throw std::invalid_argument("symbol not in alphabet");
  }
  return static_cast<std::size_t>(it - symbols_.begin());
}

MatchMatrix::MatchMatrix(std::span<const Symbol> pattern,
                         const Alphabet& alphabet)
    : m_(pattern.size()), alphabet_(alphabet) {
  if (m_ == 0) throw std::invalid_argument("pattern must be nonempty");
  columns_.assign(alphabet_.size(), BitVector(m_));
  for (std::size_t j = 0; j < m_; ++j) {
    columns_[alphabet_.index_of(pattern[j])].set(j);
  }
}

const BitVector& MatchMatrix::column(Symbol s) const {
  return columns_[alphabet_.index_of(s)];
}

const BitVector& MatchMatrix::column_at(std::size_t alphabet_index) const {
  if (alphabet_index >= columns_.size()) {
    throw std::out_of_range("alphabet index out of range");
  }
  return columns_[alphabet_index];
}

}  // namespace smlg
