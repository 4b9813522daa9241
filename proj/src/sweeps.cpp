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

#include "qmindist/sweeps.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmindist/atomsets.hpp"
#include "qmindist/kloracle.hpp"
#include "qmindist/pauli.hpp"

namespace qmindist {

SimpleGraph labeled_graph(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph::from_edges(n, edges);
}

DegreeBoundSummary& DegreeBoundSummary::operator+=(const DegreeBoundSummary& o) {
  graphs += o.graphs;
  four_cycle_free += o.four_cycle_free;
  at_delta += o.at_delta;
  at_delta_plus_one += o.at_delta_plus_one;
  violations += o.violations;
  if (o.first_violation && (!first_violation || *o.first_violation < *first_violation)) {
    first_violation = o.first_violation;
  }
  return *this;
}

DegreeBoundSummary degree_bound_sweep(std::size_t n, const SearchOptions& options) {
  if (n > 8) throw std::invalid_argument("degree_bound_sweep: n > 8");
  const std::size_t pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const std::uint64_t chunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<DegreeBoundSummary> parts(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    DegreeBoundSummary& s = parts[c];
    const std::uint64_t end = std::min<std::uint64_t>(total, (c + 1) * chunk);
    for (std::uint64_t code = c * chunk; code < end; ++code) {
      ++s.graphs;
      const SimpleGraph g = labeled_graph(n, code);
      if (has_four_cycle(g)) continue;
      ++s.four_cycle_free;
      const std::size_t delta = g.min_degree();
      const std::size_t d = gdist(g).distance.value();
      if (d == delta) {
        ++s.at_delta;
      } else if (d == delta + 1) {
        ++s.at_delta_plus_one;
      } else {
        ++s.violations;
        if (!s.first_violation) s.first_violation = code;
      }
    }
  });
  DegreeBoundSummary out;
  out.n = n;
  for (const auto& p : parts) out += p;
  return out;
}

ZeroSumSummary& ZeroSumSummary::operator+=(const ZeroSumSummary& o) {
  graphs += o.graphs;
  subsets += o.subsets;
  not_sets += o.not_sets;
  not_atom += o.not_atom;
  bound_failures += o.bound_failures;
  one_heavy += o.one_heavy;
  all_heavy += o.all_heavy;
  minimal_form_failures += o.minimal_form_failures;
  large_set_checked += o.large_set_checked;
  large_set_failures += o.large_set_failures;
  isolated_heavy_checked += o.isolated_heavy_checked;
  isolated_heavy_failures += o.isolated_heavy_failures;
  mid_size_checked += o.mid_size_checked;
  mid_size_failures += o.mid_size_failures;
  return *this;
}

ZeroSumSummary zero_sum_check_graph(const SimpleGraph& g) {
  ZeroSumSummary s;
  s.graphs = 1;
  const auto cols = identity_adjacency_columns(g);
  for (const auto& indices : enumerate_zero_sum_subsets(cols)) {
    ++s.subsets;
    std::optional<VectorSet> set;
    try {
      set = select(cols, indices);
    } catch (const std::invalid_argument&) {
      ++s.not_sets;
      continue;
    }
    if (std::any_of(set->members().begin(), set->members().end(),
                    [](const BitVector& v) { return v.is_zero(); })) {
      ++s.not_sets;
      continue;
    }
    if (!is_atom(*set)) {
      ++s.not_atom;
      continue;
    }
    if (!check_large_part_bound(*set)) ++s.bound_failures;
    switch (classify_minimal_set(*set)) {
      case MinimalSetForm::kOneHeavy: ++s.one_heavy; break;
      case MinimalSetForm::kAllHeavy: ++s.all_heavy; break;
      case MinimalSetForm::kViolation: ++s.minimal_form_failures; break;
      case MinimalSetForm::kNotSizeDeltaPlusOne: break;
    }
    const ClaimChecks claims = check_claims(*set);
    if (claims.large_set_applies) {
      ++s.large_set_checked;
      if (!claims.large_set_holds) ++s.large_set_failures;
    }
    if (claims.isolated_heavy_applies) {
      ++s.isolated_heavy_checked;
      if (!claims.isolated_heavy_holds) ++s.isolated_heavy_failures;
    }
    if (claims.mid_size_applies) {
      ++s.mid_size_checked;
      if (!claims.mid_size_holds) ++s.mid_size_failures;
    }
  }
  return s;
}

ZeroSumSummary zero_sum_sweep(std::size_t n) {
  if (n > 8) throw std::invalid_argument("zero_sum_sweep: n > 8");
  const std::size_t pairs = n * (n - 1) / 2;
  ZeroSumSummary out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const SimpleGraph g = labeled_graph(n, code);
    if (has_four_cycle(g)) continue;
    out += zero_sum_check_graph(g);
  }
  return out;
}

CwsCode random_cws(std::mt19937_64& rng, std::size_t n, bool all_components) {
  if (n == 0) throw std::invalid_argument("random_cws: n = 0");
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> row_count(0, n - 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  SimpleGraph g = SimpleGraph::from_edges(n, edges);
  while (true) {
    BitMatrix h(row_count(rng), n);
    for (std::size_t r = 0; r < h.rows(); ++r) {
      for (std::size_t c = 0; c < n; ++c) h.set(r, c, coin(rng));
    }
    LinearCode code = LinearCode::from_parity_check(std::move(h));
    if (!all_components || uses_all_components(code)) return CwsCode(std::move(g), std::move(code));
  }
}

TriangleReport oracle_triangle(const CwsCode& q, std::size_t detect_weight) {
  const std::size_t n = q.num_qubits();
  TriangleReport report;
  report.classicalized = qdist(q, n).distance;
  const SymplecticMatrix s = to_stabilizer(q);
  report.stabilizer = stab_distance(s, n).distance;
  report.knill_laflamme = kl::qdist_kl(q, n).distance;

  const StabilizerDetector stab(s);
  const auto words = kl::codewords(q);
  const std::size_t qd = report.classicalized.found() ? report.classicalized.value() : n + 1;
  auto paulis = enumerate_paulis(n, std::min(n, std::max(detect_weight, qd - 1)));
  while (auto e = paulis.next()) {
    const kl::KlResult r = kl::kl_f(words, *e);
    if (e->weight() <= detect_weight) {
      ++report.paulis_checked;
      const bool a = detects(q, *e);
      if (a != r.detected || a != stab.detects(*e)) ++report.detection_mismatches;
    }
    if (e->weight() + 1 <= qd) {
      ++report.f_checked;
      if (!kl::f_value_consistent(q, *e, r)) ++report.f_failures;
    }
  }
  return report;
}

}  // namespace qmindist
