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
#include <random>

#include "qmindist/cws.hpp"
#include "qmindist/graphs.hpp"
#include "qmindist/search.hpp"

// Exhaustive and randomized checks over small instances.
namespace qmindist {

/// Graph number `code` on n vertices: bit b of code is the b-th pair (i, j),
/// i < j, in lexicographic order.
SimpleGraph labeled_graph(std::size_t n, std::uint64_t code);

struct DegreeBoundSummary {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t four_cycle_free = 0;
  std::uint64_t at_delta = 0;
  std::uint64_t at_delta_plus_one = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation;  // graph code

  DegreeBoundSummary& operator+=(const DegreeBoundSummary& other);
};

/// gdist(G) in {delta, delta+1} over every 4-cycle-free labeled graph on
/// exactly n vertices (n <= 8).
DegreeBoundSummary degree_bound_sweep(std::size_t n, const SearchOptions& options = {});

struct ZeroSumSummary {
  std::uint64_t graphs = 0;
  std::uint64_t subsets = 0;
  std::uint64_t not_sets = 0;  // repeated or zero columns
  std::uint64_t not_atom = 0;
  std::uint64_t bound_failures = 0;
  std::uint64_t one_heavy = 0;
  std::uint64_t all_heavy = 0;
  std::uint64_t minimal_form_failures = 0;
  std::uint64_t large_set_checked = 0;
  std::uint64_t large_set_failures = 0;
  std::uint64_t isolated_heavy_checked = 0;
  std::uint64_t isolated_heavy_failures = 0;
  std::uint64_t mid_size_checked = 0;
  std::uint64_t mid_size_failures = 0;

  std::uint64_t failures() const {
    return not_atom + bound_failures + minimal_form_failures + large_set_failures + isolated_heavy_failures +
           mid_size_failures;
  }
  ZeroSumSummary& operator+=(const ZeroSumSummary& other);
};

/// Every nonempty zero-sum subset of the columns of (I | A_G), for every
/// 4-cycle-free labeled graph on exactly n vertices. Subsets that repeat a
/// column or contain the zero column are counted in not_sets and skipped.
ZeroSumSummary zero_sum_sweep(std::size_t n);
ZeroSumSummary zero_sum_check_graph(const SimpleGraph& g);

/// Random CWS instance on n vertices: G(n, 1/2) and a uniformly random check
/// matrix with a random number of rows below n, so k >= 1. With
/// all_components, resampled until the code uses every coordinate.
CwsCode random_cws(std::mt19937_64& rng, std::size_t n, bool all_components = false);

struct TriangleReport {
  CappedDistance classicalized = CappedDistance::above(0);
  CappedDistance stabilizer = CappedDistance::above(0);
  CappedDistance knill_laflamme = CappedDistance::above(0);
  std::uint64_t paulis_checked = 0;
  std::uint64_t detection_mismatches = 0;
  std::uint64_t f_checked = 0;
  std::uint64_t f_failures = 0;

  bool distances_agree() const { return classicalized == stabilizer && stabilizer == knill_laflamme; }
  bool ok() const { return distances_agree() && detection_mismatches == 0 && f_failures == 0; }
};

/// Distances by classicalized detection, by the stabilizer form and by the
/// statevector Knill-Laflamme test; the three detection predicates on every
/// Pauli of weight <= detect_weight; and the f-value classification for all
/// Paulis of weight <= qdist - 1.
TriangleReport oracle_triangle(const CwsCode& q, std::size_t detect_weight = 3);

}  // namespace qmindist
