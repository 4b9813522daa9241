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
#include <optional>
#include <string>
#include <vector>

#include "qmindist/codes.hpp"
#include "qmindist/gf2.hpp"
#include "qmindist/graphs.hpp"
#include "qmindist/pauli.hpp"
#include "qmindist/search.hpp"

namespace qmindist {

/// Codeword-stabilized code CWS(G, C) with linear C: the span of Z(c)|s>,
/// c in C, where |s> is the graph state of G.
class CwsCode {
 public:
  /// Throws std::invalid_argument if the graph and code lengths differ.
  CwsCode(SimpleGraph graph, LinearCode code);

  const SimpleGraph& graph() const { return graph_; }
  const LinearCode& code() const { return code_; }
  std::size_t num_qubits() const { return graph_.num_vertices(); }
  std::size_t dimension() const { return code_.dimension(); }
  /// Word-operator generators: Z(c) for each kernel basis vector c.
  const std::vector<BitVector>& word_generators() const { return code_.kernel(); }

 private:
  SimpleGraph graph_;
  LinearCode code_;
};

/// Stabilizer generators in (a|b) form, one PauliOperator per row.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(std::size_t n) : n_(n) {}
  /// Throws std::invalid_argument if a row has the wrong qubit count.
  SymplecticMatrix(std::size_t n, std::vector<PauliOperator> rows);

  std::size_t num_qubits() const { return n_; }
  std::size_t num_rows() const { return rows_.size(); }
  const PauliOperator& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<PauliOperator>& rows() const { return rows_; }

  /// All rows pairwise commute.
  bool is_isotropic() const;
  /// The rows as a num_rows x 2n matrix (a | b).
  BitMatrix to_bit_matrix() const;

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<PauliOperator> rows_;
};

/// Cl_G(X(a)Z(b)) = b + sum_i a_i u^i. Throws std::invalid_argument on size
/// mismatch.
BitVector classicalize(const SimpleGraph& g, const PauliOperator& e);

/// Detection via the classicalized error: if Cl_G(E) != 0 it must not be a
/// codeword; if Cl_G(E) = 0, E must commute with every word operator.
bool detects(const CwsCode& q, const PauliOperator& e);

/// Graph-state distance: min |supp(a) | supp(A_G a)| over a != 0. With a cap,
/// only weights <= cap are searched. The witness is X(a)Z(A_G a).
DistanceSearch gdist(const SimpleGraph& g, std::optional<std::size_t> cap = std::nullopt,
                     const SearchOptions& options = {});

/// Minimum weight of an undetected non-identity Pauli, searched up to w_cap
/// (clamped to n). The witness is the first undetected error in enumeration
/// order.
DistanceSearch qdist(const CwsCode& q, std::size_t w_cap, const SearchOptions& options = {});

struct DegeneracyReport {
  std::size_t qdist = 0;
  /// Graph distance searched with cap = qdist; above the cap when no
  /// stabilizer element of weight <= qdist exists or the certificate applies.
  CappedDistance gdist = CappedDistance::above(0);
  /// Set when the graph is 4-cycle free with min degree >= qdist, so the
  /// graph distance is at least the min degree without any search.
  bool certified_by_min_degree = false;
  bool degenerate = false;
};

/// Throws NoNonzeroCodeword when k = 0.
DegeneracyReport analyze_degeneracy(const CwsCode& q, const SearchOptions& options = {});
/// Gdist(Q) < qdist(Q). Throws NoNonzeroCodeword when k = 0.
bool is_degenerate(const CwsCode& q, const SearchOptions& options = {});

/// Generators (h | A_G h) for a basis h of the row space of H, taken greedily
/// from the rows of H in order.
SymplecticMatrix to_stabilizer(const CwsCode& q);

/// For k = n - rank(S) > 0: min weight of a non-identity Pauli commuting with
/// every row and outside the row space. For k = 0: min weight of a nonzero
/// row-space element. Throws std::invalid_argument if rows do not commute.
DistanceSearch stab_distance(const SymplecticMatrix& s, std::size_t w_cap,
                             const SearchOptions& options = {});

/// Detection for the stabilizer code of S: E is detected unless it commutes
/// with every row and lies outside the row space.
class StabilizerDetector {
 public:
  /// Throws std::invalid_argument if rows do not commute.
  explicit StabilizerDetector(SymplecticMatrix s);
  bool detects(const PauliOperator& e) const;

 private:
  SymplecticMatrix s_;
  RrefResult reduced_;
};

/// Text format: "<rows> <n>" then one "a|b" line per row.
SymplecticMatrix read_symplectic(std::istream& in);
void write_symplectic(std::ostream& out, const SymplecticMatrix& s);
SymplecticMatrix load_symplectic(const std::string& path);
void save_symplectic(const std::string& path, const SymplecticMatrix& s);

}  // namespace qmindist
