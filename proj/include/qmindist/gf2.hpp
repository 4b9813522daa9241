// Copyright 2026 The qmindist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmindist {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over GF(2), packed 64 bits per word.
/// Bits at positions >= size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length)
      : length_(length), words_(words_for(length), 0) {}

  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument.
  static BitVector from_string(std::string_view bits);
  static BitVector unit(std::size_t length, std::size_t index);

  std::size_t size() const { return length_; }
  std::size_t num_words() const { return words_.size(); }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool is_zero() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t first_set() const;
  std::vector<std::size_t> support() const;

  /// GF(2) inner product. Throws std::invalid_argument on length mismatch.
  bool dot(const BitVector& other) const;
  /// |supp(this) & supp(other)|.
  std::size_t overlap(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Lexicographic order on the bit string (position 0 most significant).
  friend bool lex_less(const BitVector& a, const BitVector& b);

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

bool lex_less(const BitVector& a, const BitVector& b);

/// Dense row-major GF(2) matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVector(cols)) {}
  /// Builds from rows; throws std::invalid_argument if lengths differ from cols.
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t n);
  /// Rows given as '0'/'1' strings. Convenience for tests and fixtures.
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVector>& row_vectors() const { return rows_; }

  /// Materializes column c.
  BitVector column(std::size_t c) const;
  BitMatrix transpose() const;

  void append_row(BitVector row);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;  // reduced row echelon form, zero rows kept at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

/// Gauss-Jordan elimination with leftmost pivot choice.
RrefResult rref(const BitMatrix& m);

/// Basis of {v : m v = 0}; one vector per free column, in increasing order
/// of free column.
std::vector<BitVector> kernel_basis(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const RrefResult& reduced);

std::size_t rank(const BitMatrix& m);

/// Throws std::invalid_argument if v.size() != m.cols().
bool in_row_space(const BitMatrix& m, const BitVector& v);
/// Same test against an already reduced matrix.
bool in_row_space(const RrefResult& reduced, const BitVector& v);

/// Throws std::invalid_argument if v.size() != m.cols().
BitVector mat_vec(const BitMatrix& m, const BitVector& v);

/// Text format: "<rows> <cols>" then one line of '0'/'1' per row.
BitMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BitMatrix& m);
BitMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const BitMatrix& m);

namespace detail {

inline void xor_words(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

inline bool all_zero(std::span<const Word> w) {
  for (Word x : w) {
    if (x != 0) return false;
  }
  return true;
}

inline std::size_t popcount_words(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

}  // namespace detail

}  // namespace qmindist
