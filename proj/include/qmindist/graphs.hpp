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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qmindist/gf2.hpp"

namespace qmindist {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph. The adjacency matrix is symmetric with a zero
/// diagonal; column i is the neighbourhood vector u^i.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Edges must satisfy i < j < n with no duplicates; throws
  /// std::invalid_argument otherwise (self-loops are reported as such).
  static SimpleGraph from_edges(std::size_t n, const std::vector<Edge>& edges);
  /// Throws std::invalid_argument unless `adjacency` is square, symmetric and
  /// has a zero diagonal.
  static SimpleGraph from_adjacency(BitMatrix adjacency);

  std::size_t num_vertices() const { return adjacency_.rows(); }
  std::size_t num_edges() const;
  const BitMatrix& adjacency() const { return adjacency_; }
  bool has_edge(std::size_t i, std::size_t j) const { return adjacency_.get(i, j); }

  std::size_t degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  /// 0 for the empty graph.
  std::size_t min_degree() const;
  /// Column u^i of the adjacency matrix. Throws std::out_of_range.
  const BitVector& adjacency_column(std::size_t i) const;
  /// |supp(u^i) & supp(u^j)|. Throws std::out_of_range.
  std::size_t common_neighbors(std::size_t i, std::size_t j) const;

  /// Edges (i, j), i < j, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  explicit SimpleGraph(BitMatrix adjacency);

  BitMatrix adjacency_;
  std::vector<std::size_t> degrees_;
};

inline std::size_t min_degree(const SimpleGraph& g) { return g.min_degree(); }

/// True iff some pair of distinct vertices has two or more common neighbours.
bool has_four_cycle(const SimpleGraph& g);

bool is_prime(std::uint64_t v);

/// Points of PG(2, p) in vertex order: (1,y,z) lexicographic, then (0,1,z),
/// then (0,0,1).
std::vector<std::array<std::uint64_t, 3>> projective_points(std::uint64_t p);

/// Orthogonal polarity graph of PG(2, p): p^2+p+1 vertices, edges between
/// distinct points with xx' + yy' + zz' = 0 (mod p), no loops.
/// Throws std::invalid_argument if p is not prime.
SimpleGraph polarity_graph(std::uint64_t p);

/// Number of points with x^2 + y^2 + z^2 = 0 (mod p).
std::size_t count_absolute_points(std::uint64_t p);

struct ProjectivePlaneSize {
  std::uint64_t m = 0;
  std::uint64_t p = 0;
};

/// m = p^2+p+1 with p prime and n <= m <= 7n: take the largest prime q with
/// q^2+q+1 < n and let p be the next prime. Throws std::invalid_argument for
/// n <= 7.
ProjectivePlaneSize find_m(std::uint64_t n);

/// Smallest p^2+p+1 >= n with p prime (any n).
ProjectivePlaneSize smallest_plane_at_least(std::uint64_t n);

/// If m = p^2+p+1 for a prime p, returns p; otherwise 0.
std::uint64_t plane_order(std::uint64_t m);

/// Text format: "<n> <num_edges>" then "i j" per edge, 0-based, i < j,
/// sorted lexicographically. The reader rejects loops, duplicates and
/// unsorted input.
SimpleGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const SimpleGraph& g);
SimpleGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const SimpleGraph& g);

}  // namespace qmindist
