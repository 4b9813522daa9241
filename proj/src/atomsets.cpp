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

#include "qmindist/atomsets.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace qmindist {

VectorSet::VectorSet(std::size_t universe, std::vector<BitVector> members)
    : universe_(universe), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].size() != universe_) throw std::invalid_argument("vector set: wrong length");
    for (std::size_t j = 0; j < i; ++j) {
      if (members_[i] == members_[j]) throw std::invalid_argument("vector set: duplicate member");
    }
  }
}

bool VectorSet::sums_to_zero() const {
  BitVector acc(universe_);
  for (const auto& v : members_) acc ^= v;
  return acc.is_zero();
}

bool is_atom(const VectorSet& s) {
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i].overlap(m[j]) > 1) return false;
    }
  }
  return true;
}

DegreeGap degree_gap(const VectorSet& s) {
  DegreeGap gap;
  for (const auto& v : s.members()) {
    const std::size_t w = v.weight();
    if (w == 1) {
      gap.light.push_back(v);
    } else if (w > 1) {
      gap.heavy.push_back(v);
      gap.delta = gap.delta == 0 ? w : std::min(gap.delta, w);
    }
  }
  if (gap.heavy.empty()) throw NoDegreeGap();
  return gap;
}

namespace {

DegreeGap validated_gap(const VectorSet& s) {
  if (s.empty()) throw PreconditionViolated("large-part bound: set is empty");
  for (const auto& v : s.members()) {
    if (v.is_zero()) throw PreconditionViolated("large-part bound: set contains the zero vector");
  }
  if (!is_atom(s)) throw PreconditionViolated("large-part bound: set is not ATOM");
  if (!s.sums_to_zero()) throw PreconditionViolated("large-part bound: set does not sum to zero");
  return degree_gap(s);
}

}  // namespace

bool check_large_part_bound(const VectorSet& s) {
  const DegreeGap gap = validated_gap(s);
  return std::max(gap.light.size(), gap.heavy.size()) >= gap.delta;
}

std::string to_string(MinimalSetForm form) {
  switch (form) {
    case MinimalSetForm::kOneHeavy: return "OneHeavy";
    case MinimalSetForm::kAllHeavy: return "AllHeavy";
    case MinimalSetForm::kNotSizeDeltaPlusOne: return "NotSizeDeltaPlusOne";
    case MinimalSetForm::kViolation: return "Violation";
  }
  return "?";
}

MinimalSetForm classify_minimal_set(const VectorSet& s) {
  const DegreeGap gap = validated_gap(s);
  const std::size_t d = gap.delta;
  if (s.size() < d + 1) return MinimalSetForm::kViolation;
  if (s.size() > d + 1) return MinimalSetForm::kNotSizeDeltaPlusOne;

  if (gap.heavy.size() == 1 && gap.heavy[0].weight() == d) {
    BitVector light_support(s.universe());
    for (const auto& e : gap.light) light_support |= e;
    if (light_support == gap.heavy[0]) return MinimalSetForm::kOneHeavy;
  }
  if (gap.light.empty() && gap.heavy.size() == d + 1 &&
      std::all_of(gap.heavy.begin(), gap.heavy.end(),
                  [d](const BitVector& v) { return v.weight() == d; })) {
    return MinimalSetForm::kAllHeavy;
  }
  return MinimalSetForm::kViolation;
}

ClaimChecks check_claims(const VectorSet& s) {
  const DegreeGap gap = validated_gap(s);
  const std::size_t d = gap.delta;
  const std::size_t size = s.size();
  const std::size_t n1 = gap.light.size();
  const std::size_t nd = gap.heavy.size();
  ClaimChecks out;

  out.large_set_applies = size >= 2 * d;
  if (out.large_set_applies) out.large_set_holds = std::max(n1, nd) >= d;

  BitVector light_support(s.universe());
  for (const auto& e : gap.light) light_support |= e;
  bool every_heavy_touches_light = true;
  for (const auto& v : gap.heavy) {
    if (v.overlap(light_support) == 0) {
      out.isolated_heavy_applies = true;
      every_heavy_touches_light = false;
    }
  }
  if (out.isolated_heavy_applies) out.isolated_heavy_holds = nd >= d + 1;

  out.mid_size_applies = d >= 3 && size >= d + 2 && size + 1 <= 2 * d && n1 >= 2 && nd >= 2 &&
                       every_heavy_touches_light;
  if (out.mid_size_applies) out.mid_size_holds = std::max(n1, nd) >= d + 1;
  return out;
}

std::vector<std::vector<std::size_t>> enumerate_zero_sum_subsets(
    const std::vector<BitVector>& columns, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  if (columns.empty()) return out;
  const std::size_t rows = columns.front().size();
  // Column matrix M (rows x #columns); zero-sum subsets are its null vectors.
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r : columns[c].support()) m.set(r, c);
  }
  const auto basis = kernel_basis(m);
  if (basis.size() > 30) throw std::length_error("zero-sum enumeration: nullity too large");

  BitVector indicator(columns.size());
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    indicator ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    if (indicator.weight() <= max_size) out.push_back(indicator.support());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<BitVector> identity_adjacency_columns(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<BitVector> cols;
  cols.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(BitVector::unit(n, i));
  for (std::size_t i = 0; i < n; ++i) cols.push_back(g.adjacency_column(i));
  return cols;
}

VectorSet select(const std::vector<BitVector>& columns, const std::vector<std::size_t>& indices) {
  std::vector<BitVector> members;
  members.reserve(indices.size());
  for (std::size_t i : indices) members.push_back(columns.at(i));
  const std::size_t universe = columns.empty() ? 0 : columns.front().size();
  return VectorSet(universe, std::move(members));
}

VectorSet read_vector_set(std::istream& in) {
  long long count = -1;
  long long universe = -1;
  if (!(in >> count >> universe) || count < 0 || universe < 0) {
    throw std::invalid_argument("vector set: expected header '<count> <N>'");
  }
  std::vector<BitVector> members;
  for (long long i = 0; i < count; ++i) {
    std::string line;
    if (!(in >> line) || line.size() != static_cast<std::size_t>(universe)) {
      throw std::invalid_argument("vector set: malformed row " + std::to_string(i));
    }
    members.push_back(BitVector::from_string(line));
  }
  return VectorSet(static_cast<std::size_t>(universe), std::move(members));
}

void write_vector_set(std::ostream& out, const VectorSet& s) {
  out << s.size() << ' ' << s.universe() << '\n';
  for (const auto& v : s.members()) out << v.to_string() << '\n';
}

VectorSet load_vector_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_vector_set(in);
}

}  // namespace qmindist
