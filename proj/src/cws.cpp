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

#include "qmindist/cws.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace qmindist {

CwsCode::CwsCode(SimpleGraph graph, LinearCode code)
    : graph_(std::move(graph)), code_(std::move(code)) {
  if (graph_.num_vertices() != code_.length()) {
    throw std::invalid_argument("CWS: graph has " + std::to_string(graph_.num_vertices()) +
                                " vertices but code length is " +
                                std::to_string(code_.length()));
  }
}

SymplecticMatrix::SymplecticMatrix(std::size_t n, std::vector<PauliOperator> rows)
    : n_(n), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.num_qubits() != n_) throw std::invalid_argument("symplectic: row has wrong length");
  }
}

bool SymplecticMatrix::is_isotropic() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      if (!commutes(rows_[i], rows_[j])) return false;
    }
  }
  return true;
}

BitMatrix SymplecticMatrix::to_bit_matrix() const {
  BitMatrix m(rows_.size(), 2 * n_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t i : rows_[r].x().support()) m.set(r, i);
    for (std::size_t i : rows_[r].z().support()) m.set(r, n_ + i);
  }
  return m;
}

BitVector classicalize(const SimpleGraph& g, const PauliOperator& e) {
  if (e.num_qubits() != g.num_vertices()) throw std::invalid_argument("classicalize: size mismatch");
  BitVector out = e.z();
  for (std::size_t i : e.x().support()) out ^= g.adjacency_column(i);
  return out;
}

namespace {

bool anticommutes_with_some_word(const CwsCode& q, const BitVector& x_part) {
  for (const auto& c : q.word_generators()) {
    if (x_part.dot(c)) return true;
  }
  return false;
}

}  // namespace

bool detects(const CwsCode& q, const PauliOperator& e) {
  if (e.num_qubits() != q.num_qubits()) throw std::invalid_argument("detects: size mismatch");
  const BitVector cl = classicalize(q.graph(), e);
  if (!cl.is_zero()) return !q.code().contains(cl);
  return !anticommutes_with_some_word(q, e.x());
}

namespace {

struct GdistPartial {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> subset;
};

// Enumerates subsets a of size `size` whose smallest element is `lead`,
// keeping the first one of minimum |a | A a|.
class SubsetSweep {
 public:
  SubsetSweep(const SimpleGraph& g, std::size_t size)
      : g_(g), size_(size), words_(words_for(g.num_vertices())),
        acc_((size + 1) * words_, 0), subset_(size) {}

  GdistPartial run(std::size_t lead) {
    best_ = {};
    subset_[0] = lead;
    push(0);
    descend(1);
    return best_;
  }

 private:
  void push(std::size_t depth) {
    std::span<const Word> prev{acc_.data() + depth * words_, words_};
    std::span<Word> cur{acc_.data() + (depth + 1) * words_, words_};
    auto col = g_.adjacency_column(subset_[depth]).words();
    for (std::size_t i = 0; i < words_; ++i) cur[i] = prev[i] ^ col[i];
  }

  void descend(std::size_t depth) {
    if (depth == size_) {
      std::span<const Word> za{acc_.data() + size_ * words_, words_};
      std::size_t w = size_;
      for (std::size_t s : subset_) {
        if ((za[s / kWordBits] >> (s % kWordBits)) & 1u) --w;
      }
      w += detail::popcount_words(za);
      if (w < best_.weight) best_ = {w, subset_};
      return;
    }
    const std::size_t last = g_.num_vertices() - (size_ - depth);
    for (std::size_t s = subset_[depth - 1] + 1; s <= last; ++s) {
      subset_[depth] = s;
      push(depth);
      descend(depth + 1);
      if (best_.weight == size_) return;  // cannot beat |a|
    }
  }

  const SimpleGraph& g_;
  std::size_t size_;
  std::size_t words_;
  std::vector<Word> acc_;  // A a for the first `depth` chosen vertices
  std::vector<std::size_t> subset_;
  GdistPartial best_;
};

}  // namespace

DistanceSearch gdist(const SimpleGraph& g, std::optional<std::size_t> cap,
                     const SearchOptions& options) {
  const std::size_t n = g.num_vertices();
  const std::size_t limit = std::min(cap.value_or(n), n);
  GdistPartial best;
  // An element X(a)Z(Aa) has weight >= |a|, so sizes >= best cannot improve.
  for (std::size_t size = 1; size <= limit && size < best.weight; ++size) {
    const std::size_t partitions = n - size + 1;
    std::vector<GdistPartial> parts(partitions);
    parallel_for(partitions, options.threads, [&](std::size_t lead) {
      SubsetSweep sweep(g, size);
      parts[lead] = sweep.run(lead);
    });
    for (auto& p : parts) {
      if (p.weight < best.weight) best = std::move(p);
    }
  }
  DistanceSearch out;
  if (best.weight > limit) {
    out.distance = CappedDistance::above(limit);
    return out;
  }
  BitVector a(n);
  for (std::size_t s : best.subset) a.set(s);
  PauliOperator witness = PauliOperator::x_only(a);
  out.witness = PauliOperator(a, classicalize(g, witness));
  out.distance = CappedDistance::exact(best.weight);
  return out;
}

DistanceSearch qdist(const CwsCode& q, std::size_t w_cap, const SearchOptions& options) {
  const std::size_t n = q.num_qubits();
  const SimpleGraph& g = q.graph();
  const RrefResult& red = q.code().reduced_check();
  const std::size_t r = red.rank;

  // Syndrome of Cl_G(E) against the reduced check rows, per site and letter.
  SiteSyndromeTable table(n, 3, r);
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector& u = g.adjacency_column(i);
    for (std::size_t row = 0; row < r; ++row) {
      const BitVector& h = red.matrix.row(row);
      const bool sx = h.dot(u);
      const bool sz = h.get(i);
      if (sx) table.set_bit(i, 0, row);
      if (sx != sz) table.set_bit(i, 1, row);
      if (sz) table.set_bit(i, 2, row);
    }
  }

  // Zero syndrome means Cl_G(E) is in C; E is undetected unless Cl_G(E) = 0
  // and E commutes with every word operator.
  const LeafPredicate undetected = [&](std::span<const std::size_t> support,
                                       std::span<const std::uint8_t> letters) {
    BitVector cl(n);
    BitVector a(n);
    for (std::size_t t = 0; t < support.size(); ++t) {
      const std::size_t s = support[t];
      if (letters[t] != 2) {
        cl ^= g.adjacency_column(s);
        a.set(s);
      }
      if (letters[t] != 0) cl.flip(s);
    }
    if (!cl.is_zero()) return true;
    return anticommutes_with_some_word(q, a);
  };

  const std::size_t cap = std::min(w_cap, n);
  DistanceSearch out;
  for (std::size_t w = 1; w <= cap; ++w) {
    if (auto hit = find_first_zero_syndrome(table, w, undetected, options)) {
      out.distance = CappedDistance::exact(w);
      out.witness = assignment_to_pauli(n, *hit);
      return out;
    }
  }
  out.distance = CappedDistance::above(cap);
  return out;
}

DegeneracyReport analyze_degeneracy(const CwsCode& q, const SearchOptions& options) {
  if (q.dimension() == 0) throw NoNonzeroCodeword();
  DegeneracyReport report;
  // k >= 1, so Z(c) for a nonzero codeword c is undetected: qdist <= n.
  report.qdist = qdist(q, q.num_qubits(), options).distance.value();
  const SimpleGraph& g = q.graph();
  if (g.min_degree() >= report.qdist && !has_four_cycle(g)) {
    report.certified_by_min_degree = true;
    report.gdist = CappedDistance::above(report.qdist - 1);
  } else {
    report.gdist = gdist(g, report.qdist, options).distance;
  }
  report.degenerate = report.gdist.found() && report.gdist.value() < report.qdist;
  return report;
}

bool is_degenerate(const CwsCode& q, const SearchOptions& options) {
  return analyze_degeneracy(q, options).degenerate;
}

SymplecticMatrix to_stabilizer(const CwsCode& q) {
  const std::size_t n = q.num_qubits();
  const BitMatrix& h = q.code().parity_check();
  std::vector<PauliOperator> rows;
  BitMatrix chosen(0, n);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (h.row(r).is_zero() || in_row_space(chosen, h.row(r))) continue;
    chosen.append_row(h.row(r));
    PauliOperator x_part = PauliOperator::x_only(h.row(r));
    rows.emplace_back(h.row(r), classicalize(q.graph(), x_part));
  }
  return SymplecticMatrix(n, std::move(rows));
}

DistanceSearch stab_distance(const SymplecticMatrix& s, std::size_t w_cap,
                             const SearchOptions& options) {
  if (!s.is_isotropic()) throw std::invalid_argument("stab_distance: rows do not commute");
  const std::size_t n = s.num_qubits();
  const RrefResult reduced = rref(s.to_bit_matrix());
  const bool logical = reduced.rank < n;

  // Symplectic products with every row, per site and letter.
  SiteSyndromeTable table(n, 3, s.num_rows());
  for (std::size_t r = 0; r < s.num_rows(); ++r) {
    const PauliOperator& row = s.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      const bool from_x = row.z().get(i);
      const bool from_z = row.x().get(i);
      if (from_x) table.set_bit(i, 0, r);
      if (from_x != from_z) table.set_bit(i, 1, r);
      if (from_z) table.set_bit(i, 2, r);
    }
  }

  const LeafPredicate accept = [&](std::span<const std::size_t> support,
                                   std::span<const std::uint8_t> letters) {
    BitVector v(2 * n);
    for (std::size_t t = 0; t < support.size(); ++t) {
      if (letters[t] != 2) v.set(support[t]);
      if (letters[t] != 0) v.set(n + support[t]);
    }
    return in_row_space(reduced, v) != logical;
  };

  const std::size_t cap = std::min(w_cap, n);
  DistanceSearch out;
  for (std::size_t w = 1; w <= cap; ++w) {
    if (auto hit = find_first_zero_syndrome(table, w, accept, options)) {
      out.distance = CappedDistance::exact(w);
      out.witness = assignment_to_pauli(n, *hit);
      return out;
    }
  }
  out.distance = CappedDistance::above(cap);
  return out;
}

StabilizerDetector::StabilizerDetector(SymplecticMatrix s) : s_(std::move(s)) {
  if (!s_.is_isotropic()) throw std::invalid_argument("stabilizer: rows do not commute");
  reduced_ = rref(s_.to_bit_matrix());
}

bool StabilizerDetector::detects(const PauliOperator& e) const {
  for (const auto& row : s_.rows()) {
    if (!commutes(row, e)) return true;
  }
  const std::size_t n = s_.num_qubits();
  BitVector v(2 * n);
  for (std::size_t i : e.x().support()) v.set(i);
  for (std::size_t i : e.z().support()) v.set(n + i);
  return in_row_space(reduced_, v);
}

SymplecticMatrix read_symplectic(std::istream& in) {
  long long rows = -1;
  long long n = -1;
  if (!(in >> rows >> n) || rows < 0 || n < 0) {
    throw std::invalid_argument("symplectic: expected header '<rows> <n>'");
  }
  std::vector<PauliOperator> out;
  for (long long r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line)) throw std::invalid_argument("symplectic: missing row " + std::to_string(r));
    const auto bar = line.find('|');
    if (bar == std::string::npos || bar != static_cast<std::size_t>(n) ||
        line.size() != 2 * static_cast<std::size_t>(n) + 1) {
      throw std::invalid_argument("symplectic: malformed row " + std::to_string(r));
    }
    out.emplace_back(BitVector::from_string(line.substr(0, bar)),
                     BitVector::from_string(line.substr(bar + 1)));
  }
  return SymplecticMatrix(static_cast<std::size_t>(n), std::move(out));
}

void write_symplectic(std::ostream& out, const SymplecticMatrix& s) {
  out << s.num_rows() << ' ' << s.num_qubits() << '\n';
  for (const auto& row : s.rows()) out << row.x().to_string() << '|' << row.z().to_string() << '\n';
}

SymplecticMatrix load_symplectic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_symplectic(in);
}

void save_symplectic(const std::string& path, const SymplecticMatrix& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_symplectic(out, s);
}

}  // namespace qmindist
