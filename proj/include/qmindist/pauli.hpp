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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmindist/gf2.hpp"

namespace qmindist {

/// Phase-free n-qubit Pauli X(x)Z(z). A site with both bits set is a Y.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  /// Throws std::invalid_argument if the parts differ in length.
  PauliOperator(BitVector x, BitVector z);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  static PauliOperator x_only(BitVector x);
  static PauliOperator z_only(BitVector z);

  /// Parses a string over {I,X,Y,Z}. Throws std::invalid_argument.
  static PauliOperator parse(std::string_view s);
  std::string to_string() const;

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }

  std::size_t weight() const;
  bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
  /// Letter at site i: 'I', 'X', 'Y' or 'Z'.
  char letter(std::size_t i) const;
  void set_letter(std::size_t i, char letter);

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVector x_;
  BitVector z_;
};

std::size_t weight(const PauliOperator& p);
/// Symplectic form is zero. Throws std::invalid_argument on size mismatch.
bool commutes(const PauliOperator& p, const PauliOperator& q);
/// Product with the phase discarded.
PauliOperator compose(const PauliOperator& p, const PauliOperator& q);

inline std::string format(const PauliOperator& p) { return p.to_string(); }
inline PauliOperator parse_pauli(std::string_view s) { return PauliOperator::parse(s); }

/// Letters in enumeration order.
inline constexpr char kPauliLetters[3] = {'X', 'Y', 'Z'};

/// Number of non-identity Paulis of weight <= w_max on n qubits,
/// sum_{w=1..w_max} C(n,w) 3^w. Saturates at UINT64_MAX.
std::uint64_t pauli_count(std::size_t n, std::size_t w_max);
/// Number of Paulis of weight exactly w. Saturates at UINT64_MAX.
std::uint64_t pauli_count_exact(std::size_t n, std::size_t w);

/// Streams every non-identity Pauli of weight <= w_max exactly once.
/// Order: weight ascending, then support lexicographically, then site letters
/// lexicographically with X < Y < Z (leftmost support site most significant).
class PauliEnumerator {
 public:
  /// Throws std::invalid_argument if w_max > n.
  PauliEnumerator(std::size_t n, std::size_t w_max);

  /// Next operator, or nullopt once the stream is exhausted.
  std::optional<PauliOperator> next();

  /// Support and letter indices (0=X, 1=Y, 2=Z) of the last yielded operator.
  const std::vector<std::size_t>& support() const { return support_; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

 private:
  bool advance_letters();
  bool advance_support();
  PauliOperator materialize() const;

  std::size_t n_;
  std::size_t w_max_;
  std::size_t weight_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
  std::vector<std::size_t> support_;
  std::vector<std::uint8_t> letters_;
};

inline PauliEnumerator enumerate_paulis(std::size_t n, std::size_t w_max) {
  return PauliEnumerator(n, w_max);
}

}  // namespace qmindist
