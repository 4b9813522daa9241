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

#include "qmindist/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qmindist {

SimpleGraph::SimpleGraph(BitMatrix adjacency) : adjacency_(std::move(adjacency)) {
  degrees_.reserve(adjacency_.rows());
  for (std::size_t i = 0; i < adjacency_.rows(); ++i) degrees_.push_back(adjacency_.row(i).weight());
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  BitMatrix adj(n, n);
  for (const auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(i));
    if (i >= n || j >= n) throw std::invalid_argument("graph: vertex index out of range");
    if (i > j) throw std::invalid_argument("graph: edge endpoints must satisfy i < j");
    if (adj.get(i, j)) {
      throw std::invalid_argument("graph: duplicate edge " + std::to_string(i) + " " +
                                  std::to_string(j));
    }
    adj.set(i, j);
    adj.set(j, i);
  }
  return SimpleGraph(std::move(adj));
}

SimpleGraph SimpleGraph::from_adjacency(BitMatrix adjacency) {
  if (adjacency.rows() != adjacency.cols()) throw std::invalid_argument("graph: adjacency not square");
  for (std::size_t i = 0; i < adjacency.rows(); ++i) {
    if (adjacency.get(i, i)) throw std::invalid_argument("graph: self-loop in adjacency");
    for (std::size_t j = i + 1; j < adjacency.rows(); ++j) {
      if (adjacency.get(i, j) != adjacency.get(j, i)) {
        throw std::invalid_argument("graph: adjacency not symmetric");
      }
    }
  }
  return SimpleGraph(std::move(adjacency));
}

std::size_t SimpleGraph::num_edges() const {
  std::size_t total = 0;
  for (std::size_t d : degrees_) total += d;
  return total / 2;
}

std::size_t SimpleGraph::min_degree() const {
  if (degrees_.empty()) return 0;
  return *std::min_element(degrees_.begin(), degrees_.end());
}

const BitVector& SimpleGraph::adjacency_column(std::size_t i) const {
  if (i >= num_vertices()) throw std::out_of_range("graph: vertex index out of range");
  // Symmetric, so row i is column i.
  return adjacency_.row(i);
}

std::size_t SimpleGraph::common_neighbors(std::size_t i, std::size_t j) const {
  return adjacency_column(i).overlap(adjacency_column(j));
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    for (std::size_t j : adjacency_.row(i).support()) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

bool has_four_cycle(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(i) < 2) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.common_neighbors(i, j) >= 2) return true;
    }
  }
  return false;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::array<std::uint64_t, 3>> projective_points(std::uint64_t p) {
  std::vector<std::array<std::uint64_t, 3>> pts;
  pts.reserve(p * p + p + 1);
  for (std::uint64_t y = 0; y < p; ++y) {
    for (std::uint64_t z = 0; z < p; ++z) pts.push_back({1, y, z});
  }
  for (std::uint64_t z = 0; z < p; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  return pts;
}

SimpleGraph polarity_graph(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("polarity_graph: p must be prime");
  const auto pts = projective_points(p);
  const std::size_t m = pts.size();
  BitMatrix adj(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint64_t dot =
          (pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2]) % p;
      if (dot == 0) {
        adj.set(i, j);
        adj.set(j, i);
      }
    }
  }
  return SimpleGraph::from_adjacency(std::move(adj));
}

std::size_t count_absolute_points(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("count_absolute_points: p must be prime");
  std::size_t count = 0;
  for (const auto& pt : projective_points(p)) {
    if ((pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2]) % p == 0) ++count;
  }
  return count;
}

namespace {

std::uint64_t plane_size(std::uint64_t p) { return p * p + p + 1; }

std::uint64_t next_prime(std::uint64_t v) {
  do {
    ++v;
  } while (!is_prime(v));
  return v;
}

}  // namespace

ProjectivePlaneSize find_m(std::uint64_t n) {
  if (n <= 7) throw std::invalid_argument("find_m: requires n > 7");
  std::uint64_t q = 0;
  for (std::uint64_t c = 2; plane_size(c) < n; ++c) {
    if (is_prime(c)) q = c;
  }
  const std::uint64_t p = next_prime(q);
  return {plane_size(p), p};
}

ProjectivePlaneSize smallest_plane_at_least(std::uint64_t n) {
  std::uint64_t p = 2;
  while (plane_size(p) < n) p = next_prime(p);
  return {plane_size(p), p};
}

std::uint64_t plane_order(std::uint64_t m) {
  for (std::uint64_t p = 2; plane_size(p) <= m; ++p) {
    if (plane_size(p) == m) return is_prime(p) ? p : 0;
  }
  return 0;
}

SimpleGraph read_graph(std::istream& in) {
  long long n = -1;
  long long count = -1;
  if (!(in >> n >> count) || n < 0 || count < 0) {
    throw std::invalid_argument("graph: expected header '<n> <num_edges>'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(count));
  for (long long e = 0; e < count; ++e) {
    long long i = -1;
    long long j = -1;
    if (!(in >> i >> j) || i < 0 || j < 0) {
      throw std::invalid_argument("graph: malformed edge line " + std::to_string(e));
    }
    Edge edge{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
    if (!edges.empty() && !(edges.back() < edge)) {
      if (edges.back() == edge) throw std::invalid_argument("graph: duplicate edge");
      throw std::invalid_argument("graph: edges not sorted lexicographically");
    }
    edges.push_back(edge);
  }
  return SimpleGraph::from_edges(static_cast<std::size_t>(n), edges);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  const auto es = g.edges();
  out << g.num_vertices() << ' ' << es.size() << '\n';
  for (const auto& [i, j] : es) out << i << ' ' << j << '\n';
}

SimpleGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graph(in);
}

void save_graph(const std::string& path, const SimpleGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, g);
}

}  // namespace qmindist
