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
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmindist/gf2.hpp"
#include "qmindist/graphs.hpp"

namespace qmindist {

/// A set of distinct binary vectors over a universe of size N.
class VectorSet {
 public:
  explicit VectorSet(std::size_t universe) : universe_(universe) {}
  /// Throws std::invalid_argument on duplicates or wrong lengths.
  VectorSet(std::size_t universe, std::vector<BitVector> members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<BitVector>& members() const { return members_; }

  bool sums_to_zero() const;

 private:
  std::size_t universe_;
  std::vector<BitVector> members_;
};

/// Raised when a set has no member of weight > 1, so no degree gap exists.
class NoDegreeGap : public std::domain_error {
 public:
  NoDegreeGap() : std::domain_error("vector set has no member of weight > 1") {}
};

/// Raised when a precondition of the large-part bound fails; `what()` names the failure.
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DegreeGap {
  std::size_t delta = 0;
  std::vector<BitVector> light;  // S_1: members of weight 1
  std::vector<BitVector> heavy;  // S_delta: members of weight > 1
};

/// Every distinct pair overlaps in at most one position.
bool is_atom(const VectorSet& s);

/// delta = minimum weight over members of weight > 1. Throws NoDegreeGap.
/// Members of weight 0 are counted neither light nor heavy.
DegreeGap degree_gap(const VectorSet& s);

/// max(|S_1|, |S_delta|) >= delta. Throws PreconditionViolated if S is empty,
/// not ATOM, does not sum to zero, or contains the zero vector; NoDegreeGap if
/// there is no heavy member.
bool check_large_part_bound(const VectorSet& s);

enum class MinimalSetForm { kOneHeavy, kAllHeavy, kNotSizeDeltaPlusOne, kViolation };

std::string to_string(MinimalSetForm form);

/// Size-(delta+1) classification: OneHeavy is one heavy vector of weight delta
/// plus the unit vectors of its support; AllHeavy is delta+1 vectors of weight
/// exactly delta and no unit vectors. Sets smaller than delta+1 are a
/// Violation. Preconditions as for check_large_part_bound.
MinimalSetForm classify_minimal_set(const VectorSet& s);

struct ClaimChecks {
  bool large_set_applies = false;  // |S| >= 2 delta
  bool large_set_holds = true;
  bool isolated_heavy_applies = false;  // a heavy vector disjoint from every unit vector
  bool isolated_heavy_holds = true;     // then |S_delta| >= delta + 1
  bool mid_size_applies = false;  // delta >= 3, delta+2 <= |S| <= 2 delta - 1, ...
  bool mid_size_holds = true;     // then max(|S_1|, |S_delta|) >= delta + 1
};

/// Evaluates the hypotheses and conclusions of the case-analysis claims.
/// Preconditions as for check_large_part_bound.
ClaimChecks check_claims(const VectorSet& s);

/// Index sets of every nonempty subset of `columns` of size <= max_size whose
/// XOR is zero, ordered by size and then lexicographically by index list. Enumerated through combinations of a
/// null-space basis. Throws std::length_error if the nullity exceeds 30.
std::vector<std::vector<std::size_t>> enumerate_zero_sum_subsets(
    const std::vector<BitVector>& columns, std::size_t max_size = static_cast<std::size_t>(-1));

/// Columns of (I | A_G): e^1..e^n followed by u^1..u^n.
std::vector<BitVector> identity_adjacency_columns(const SimpleGraph& g);

/// Members picked out by an index subset. Throws std::invalid_argument if the
/// picked vectors are not distinct.
VectorSet select(const std::vector<BitVector>& columns, const std::vector<std::size_t>& indices);

/// Text format: "<count> <N>" then one '0'/'1' row per vector.
VectorSet read_vector_set(std::istream& in);
void write_vector_set(std::ostream& out, const VectorSet& s);
VectorSet load_vector_set(const std::string& path);

}  // namespace qmindist
