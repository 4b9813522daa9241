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

#include "qmindist/gf2.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qmindist {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": length mismatch (" << a << " vs " << b << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string contains a character other than 0/1");
    }
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

std::size_t BitVector::weight() const { return detail::popcount_words(words_); }

bool BitVector::is_zero() const { return detail::all_zero(words_); }

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return length_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_length(length_, other.length_, "dot");
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::overlap(const BitVector& other) const {
  require_same_length(length_, other.length_, "overlap");
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(length_, other.length_, "xor");
  detail::xor_words(words_, other.words_);
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(length_, other.length_, "and");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_length(length_, other.length_, "or");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool lex_less(const BitVector& a, const BitVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.get(i) != b.get(i)) return b.get(i);
  }
  return a.size() < b.size();
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows)
    : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> vs;
  vs.reserve(rows.size());
  for (const auto& r : rows) vs.push_back(BitVector::from_string(r));
  const std::size_t cols = vs.empty() ? 0 : vs.front().size();
  return BitMatrix(cols, std::move(vs));
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(c)) v.set(r);
  }
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  }
  return t;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
  rows_.push_back(std::move(row));
}

RrefResult rref(const BitMatrix& m) {
  RrefResult out{m, 0, {}};
  auto& rows = out.matrix;
  const std::size_t nrows = rows.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < nrows; ++c) {
    std::size_t pivot = r;
    while (pivot < nrows && !rows.get(pivot, c)) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows.row(r), rows.row(pivot));
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i != r && rows.get(i, c)) rows.row(i) ^= rows.row(r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<BitVector> kernel_basis(const RrefResult& reduced) {
  const std::size_t n = reduced.matrix.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : reduced.pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  basis.reserve(n - reduced.rank);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t r = 0; r < reduced.rank; ++r) {
      if (reduced.matrix.get(r, f)) v.set(reduced.pivots[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) { return kernel_basis(rref(m)); }

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

bool in_row_space(const RrefResult& reduced, const BitVector& v) {
  require_same_length(v.size(), reduced.matrix.cols(), "in_row_space");
  BitVector residual = v;
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    if (residual.get(reduced.pivots[r])) residual ^= reduced.matrix.row(r);
  }
  return residual.is_zero();
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
  require_same_length(v.size(), m.cols(), "in_row_space");
  return in_row_space(rref(m), v);
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
  require_same_length(v.size(), m.cols(), "mat_vec");
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).dot(v)) out.set(r);
  }
  return out;
}

BitMatrix read_matrix(std::istream& in) {
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix: expected header '<rows> <cols>'");
  }
  BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line)) throw std::invalid_argument("matrix: missing row " + std::to_string(r));
    if (line.size() != static_cast<std::size_t>(cols)) {
      throw std::invalid_argument("matrix: ragged row " + std::to_string(r));
    }
    m.row(static_cast<std::size_t>(r)) = BitVector::from_string(line);
  }
  return m;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
}

BitMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_matrix(in);
}

void save_matrix(const std::string& path, const BitMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_matrix(out, m);
}

}  // namespace qmindist
