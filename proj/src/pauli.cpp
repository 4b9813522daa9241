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

#include "qmindist/pauli.hpp"

#include <limits>
#include <stdexcept>

namespace qmindist {

PauliOperator::PauliOperator(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw std::invalid_argument("Pauli: x and z lengths differ");
}

PauliOperator PauliOperator::x_only(BitVector x) {
  BitVector z(x.size());
  return PauliOperator(std::move(x), std::move(z));
}

PauliOperator PauliOperator::z_only(BitVector z) {
  BitVector x(z.size());
  return PauliOperator(std::move(x), std::move(z));
}

PauliOperator PauliOperator::parse(std::string_view s) {
  PauliOperator p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) p.set_letter(i, s[i]);
  return p;
}

void PauliOperator::set_letter(std::size_t i, char letter) {
  switch (letter) {
    case 'I': x_.set(i, false); z_.set(i, false); break;
    case 'X': x_.set(i, true); z_.set(i, false); break;
    case 'Y': x_.set(i, true); z_.set(i, true); break;
    case 'Z': x_.set(i, false); z_.set(i, true); break;
    default:
      throw std::invalid_argument(std::string("Pauli: invalid character '") + letter + "'");
  }
}

char PauliOperator::letter(std::size_t i) const {
  static constexpr char kTable[4] = {'I', 'X', 'Z', 'Y'};
  return kTable[(x_.get(i) ? 1 : 0) | (z_.get(i) ? 2 : 0)];
}

std::string PauliOperator::to_string() const {
  std::string s(num_qubits(), 'I');
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = letter(i);
  return s;
}

std::size_t PauliOperator::weight() const { return (x_ | z_).weight(); }

std::size_t weight(const PauliOperator& p) { return p.weight(); }

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("commutes: size mismatch");
  return p.x().dot(q.z()) == q.x().dot(p.z());
}

PauliOperator compose(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("compose: size mismatch");
  return PauliOperator(p.x() ^ q.x(), p.z() ^ q.z());
}

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSat / b) return kSat;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::uint64_t pauli_count_exact(std::size_t n, std::size_t w) {
  std::uint64_t pow3 = 1;
  for (std::size_t i = 0; i < w; ++i) pow3 = sat_mul(pow3, 3);
  return sat_mul(binomial(n, w), pow3);
}

std::uint64_t pauli_count(std::size_t n, std::size_t w_max) {
  std::uint64_t total = 0;
  for (std::size_t w = 1; w <= w_max && w <= n; ++w) total = sat_add(total, pauli_count_exact(n, w));
  return total;
}

PauliEnumerator::PauliEnumerator(std::size_t n, std::size_t w_max) : n_(n), w_max_(w_max) {
  if (w_max > n) throw std::invalid_argument("enumerate_paulis: w_max exceeds n");
}

bool PauliEnumerator::advance_letters() {
  for (std::size_t i = letters_.size(); i-- > 0;) {
    if (letters_[i] < 2) {
      ++letters_[i];
      return true;
    }
    letters_[i] = 0;
  }
  return false;
}

bool PauliEnumerator::advance_support() {
  const std::size_t w = support_.size();
  for (std::size_t i = w; i-- > 0;) {
    if (support_[i] < n_ - w + i) {
      ++support_[i];
      for (std::size_t j = i + 1; j < w; ++j) support_[j] = support_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

PauliOperator PauliEnumerator::materialize() const {
  PauliOperator p(n_);
  for (std::size_t i = 0; i < support_.size(); ++i) {
    p.set_letter(support_[i], kPauliLetters[letters_[i]]);
  }
  return p;
}

std::optional<PauliOperator> PauliEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (started_ && (advance_letters() || advance_support())) return materialize();
  started_ = true;
  if (weight_ >= w_max_) {
    exhausted_ = true;
    return std::nullopt;
  }
  ++weight_;
  support_.resize(weight_);
  for (std::size_t i = 0; i < weight_; ++i) support_[i] = i;
  letters_.assign(weight_, 0);
  return materialize();
}

}  // namespace qmindist
