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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qmindist/cws.hpp"
#include "qmindist/graphs.hpp"
#include "qmindist/pauli.hpp"
#include "qmindist/search.hpp"

// Brute-force statevector oracle. Every amplitude that arises here is
// (Gaussian integer) * 2^{-n/2} and every inner product is (Gaussian integer)
// * 2^{-n}, so all comparisons are exact.
namespace qmindist::kl {

inline constexpr std::size_t kDefaultQubitCap = 14;

class QubitCapExceeded : public std::length_error {
 public:
  explicit QubitCapExceeded(std::size_t n)
      : std::length_error("statevector oracle: " + std::to_string(n) + " qubits exceeds the cap") {}
};

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt conj() const { return {re, -im}; }
  std::int64_t norm() const { return re * re + im * im; }
  friend bool operator==(GaussInt, GaussInt) = default;
};

/// State on n qubits with amplitude numerators[x] * 2^{-n/2}. Basis index bit
/// i is qubit i.
class StateVector {
 public:
  StateVector(std::size_t n, std::vector<GaussInt> numerators);

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return numerators_.size(); }
  const std::vector<GaussInt>& numerators() const { return numerators_; }
  std::complex<double> amplitude(std::size_t x) const;

  /// Sum of |numerator|^2; equals 2^n for a unit vector.
  std::int64_t norm_numerator() const;
  bool is_normalized() const { return norm_numerator() == (std::int64_t{1} << n_); }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::size_t n_;
  std::vector<GaussInt> numerators_;
};

/// A dyadic Gaussian rational num / 2^log2_den.
struct Dyadic {
  GaussInt num;
  std::size_t log2_den = 0;

  std::complex<double> value() const;
  bool is_zero() const { return num.re == 0 && num.im == 0; }
  /// Exactly +1 or -1.
  bool is_unit_sign() const {
    return num.im == 0 && (num.re == (std::int64_t{1} << log2_den) ||
                           num.re == -(std::int64_t{1} << log2_den));
  }
};

/// Amplitude of x is 2^{-n/2} (-1)^{#edges inside supp(x)}. Throws
/// QubitCapExceeded when n > cap.
StateVector graph_state(const SimpleGraph& g, std::size_t cap = kDefaultQubitCap);

/// X permutes basis indices, Z flips signs, Y = iXZ site by site.
/// Throws std::invalid_argument on size mismatch.
StateVector apply_pauli(const StateVector& state, const PauliOperator& p);

/// <a|b> as a dyadic rational.
Dyadic inner_product(const StateVector& a, const StateVector& b);

/// Codewords Z(c)|s> for every c in C, enumerated as combinations of the
/// kernel basis in binary counting order.
std::vector<StateVector> codewords(const CwsCode& q, std::size_t cap = kDefaultQubitCap);

struct KlResult {
  bool detected = false;
  /// The common diagonal value when detected.
  Dyadic f;
};

/// Builds M_ij = <c_i|E|c_j> over all codewords and reports whether M = f I.
/// Throws QubitCapExceeded when n > cap.
KlResult kl_f(const CwsCode& q, const PauliOperator& e, std::size_t cap = kDefaultQubitCap);
bool detects_kl(const CwsCode& q, const PauliOperator& e, std::size_t cap = kDefaultQubitCap);

/// Same as kl_f but reuses precomputed codeword states.
KlResult kl_f(const std::vector<StateVector>& words, const PauliOperator& e);

/// Weight-ordered search for the first Pauli violating the Knill-Laflamme
/// condition, up to w_cap.
DistanceSearch qdist_kl(const CwsCode& q, std::size_t w_cap, std::size_t cap = kDefaultQubitCap);

/// For a detected E of weight <= qdist - 1: f must be 0 or +-1, and nonzero
/// exactly when Cl_G(E) = 0. Returns false if this fails.
bool f_value_consistent(const CwsCode& q, const PauliOperator& e, const KlResult& result);

/// Diagnostic dump of the matrix M as a text table of complex values.
void write_kl_matrix(std::ostream& out, const CwsCode& q, const PauliOperator& e,
                     std::size_t cap = kDefaultQubitCap);

}  // namespace qmindist::kl
