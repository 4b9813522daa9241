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
#include <stdexcept>
#include <vector>

#include "qmindist/gf2.hpp"
#include "qmindist/search.hpp"

namespace qmindist {

/// Raised when a distance is requested for the zero-dimensional code.
class NoNonzeroCodeword : public std::domain_error {
 public:
  NoNonzeroCodeword() : std::domain_error("code has no nonzero codeword (k = 0)") {}
};

/// Binary linear code given as the null space of a parity-check matrix.
/// The check matrix may be rank deficient; k is always n - rank(H).
class LinearCode {
 public:
  static LinearCode from_parity_check(BitMatrix h);

  const BitMatrix& parity_check() const { return h_; }
  std::size_t length() const { return h_.cols(); }
  std::size_t dimension() const { return kernel_.size(); }
  std::size_t check_rank() const { return reduced_.rank; }

  /// Basis of the code, one vector per free column of rref(H).
  const std::vector<BitVector>& kernel() const { return kernel_; }
  /// rref(H); its first check_rank() rows span the dual code.
  const RrefResult& reduced_check() const { return reduced_; }

  /// Syndrome with respect to the reduced (full row rank) check rows.
  BitVector syndrome(const BitVector& v) const;
  /// True iff H v = 0 (the zero vector included).
  bool contains(const BitVector& v) const;

 private:
  LinearCode(BitMatrix h, RrefResult reduced, std::vector<BitVector> kernel)
      : h_(std::move(h)), reduced_(std::move(reduced)), kernel_(std::move(kernel)) {}

  BitMatrix h_;
  RrefResult reduced_;
  std::vector<BitVector> kernel_;
};

inline LinearCode from_parity_check(BitMatrix h) {
  return LinearCode::from_parity_check(std::move(h));
}

enum class DistanceStrategy {
  kAuto,           // gray sweep when k <= gray_threshold, else weight ordered
  kGraySweep,      // all 2^k - 1 nonzero message combinations
  kWeightOrdered,  // supports of increasing weight with zero syndrome
};

struct MinDistanceOptions {
  DistanceStrategy strategy = DistanceStrategy::kAuto;
  std::size_t gray_threshold = 24;
  unsigned threads = 1;
};

/// Minimum Hamming weight of a nonzero codeword. Throws NoNonzeroCodeword
/// when k = 0.
std::size_t min_distance(const LinearCode& code, const MinDistanceOptions& options = {});

/// All codewords of weight min_distance(code), sorted lexicographically.
std::vector<BitVector> minimum_weight_codewords(const LinearCode& code,
                                                const MinDistanceOptions& options = {});

/// False iff e is a nonzero codeword. Throws std::invalid_argument on length
/// mismatch.
bool detects(const LinearCode& code, const BitVector& e);

/// True iff every coordinate is nonzero in some codeword. False for k = 0.
bool uses_all_components(const LinearCode& code);

/// Block-diagonal H (+) I_{m-n}. Throws std::invalid_argument if m < n.
BitMatrix pad(const BitMatrix& h, std::size_t m);

}  // namespace qmindist
