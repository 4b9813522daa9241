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

#include "qmindist/kloracle.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace qmindist::kl {

StateVector::StateVector(std::size_t n, std::vector<GaussInt> numerators)
    : n_(n), numerators_(std::move(numerators)) {
  if (numerators_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("StateVector: dimension is not 2^n");
  }
}

std::complex<double> StateVector::amplitude(std::size_t x) const {
  const double scale = std::pow(2.0, -0.5 * static_cast<double>(n_));
  return {static_cast<double>(numerators_.at(x).re) * scale,
          static_cast<double>(numerators_.at(x).im) * scale};
}

std::int64_t StateVector::norm_numerator() const {
  std::int64_t total = 0;
  for (const auto& a : numerators_) total += a.norm();
  return total;
}

std::complex<double> Dyadic::value() const {
  const double scale = std::ldexp(1.0, -static_cast<int>(log2_den));
  return {static_cast<double>(num.re) * scale, static_cast<double>(num.im) * scale};
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n >= 31) throw QubitCapExceeded(n);
}

std::uint64_t to_mask(const BitVector& v) {
  std::uint64_t m = 0;
  for (std::size_t i : v.support()) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

StateVector graph_state(const SimpleGraph& g, std::size_t cap) {
  const std::size_t n = g.num_vertices();
  check_cap(n, cap);
  std::vector<std::uint64_t> nbr(n);
  for (std::size_t i = 0; i < n; ++i) nbr[i] = to_mask(g.adjacency_column(i));
  std::vector<GaussInt> amps(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    std::size_t inside = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((x >> i) & 1u) inside += static_cast<std::size_t>(std::popcount(nbr[i] & x));
    }
    // Each internal edge was counted from both endpoints.
    amps[x] = {(inside / 2) % 2 == 0 ? 1 : -1, 0};
  }
  return StateVector(n, std::move(amps));
}

StateVector apply_pauli(const StateVector& state, const PauliOperator& p) {
  if (p.num_qubits() != state.num_qubits()) throw std::invalid_argument("apply_pauli: size mismatch");
  const std::uint64_t a = to_mask(p.x());
  const std::uint64_t b = to_mask(p.z());
  // Y = iXZ contributes a factor i per Y site.
  static constexpr GaussInt kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const GaussInt phase = kIPow[std::popcount(a & b) % 4];
  const auto& in = state.numerators();
  std::vector<GaussInt> out(in.size());
  for (std::uint64_t x = 0; x < in.size(); ++x) {
    GaussInt v = phase * in[x];
    if (std::popcount(b & x) & 1) v = -v;
    out[x ^ a] = v;
  }
  return StateVector(state.num_qubits(), std::move(out));
}

Dyadic inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner_product: size mismatch");
  GaussInt acc;
  const auto& u = a.numerators();
  const auto& v = b.numerators();
  for (std::size_t x = 0; x < u.size(); ++x) acc = acc + u[x].conj() * v[x];
  return {acc, a.num_qubits()};
}

std::vector<StateVector> codewords(const CwsCode& q, std::size_t cap) {
  check_cap(q.num_qubits(), cap);
  const StateVector s = graph_state(q.graph(), cap);
  const auto& basis = q.word_generators();
  std::vector<StateVector> out;
  out.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << basis.size()); ++msg) {
    BitVector c(q.num_qubits());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if ((msg >> j) & 1u) c ^= basis[j];
    }
    out.push_back(apply_pauli(s, PauliOperator::z_only(c)));
  }
  return out;
}

KlResult kl_f(const std::vector<StateVector>& words, const PauliOperator& e) {
  KlResult result;
  std::optional<GaussInt> diagonal;
  std::size_t log2_den = 0;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const StateVector moved = apply_pauli(words[j], e);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const Dyadic m = inner_product(words[i], moved);
      log2_den = m.log2_den;
      if (i != j) {
        if (!m.is_zero()) return result;
      } else if (!diagonal) {
        diagonal = m.num;
      } else if (!(*diagonal == m.num)) {
        return result;
      }
    }
  }
  result.detected = true;
  result.f = {diagonal.value_or(GaussInt{}), log2_den};
  return result;
}

KlResult kl_f(const CwsCode& q, const PauliOperator& e, std::size_t cap) {
  if (e.num_qubits() != q.num_qubits()) throw std::invalid_argument("kl_f: size mismatch");
  return kl_f(codewords(q, cap), e);
}

bool detects_kl(const CwsCode& q, const PauliOperator& e, std::size_t cap) {
  return kl_f(q, e, cap).detected;
}

DistanceSearch qdist_kl(const CwsCode& q, std::size_t w_cap, std::size_t cap) {
  const auto words = codewords(q, cap);
  const std::size_t limit = std::min(w_cap, q.num_qubits());
  PauliEnumerator paulis(q.num_qubits(), limit);
  DistanceSearch out;
  while (auto e = paulis.next()) {
    if (!kl_f(words, *e).detected) {
      out.distance = CappedDistance::exact(e->weight());
      out.witness = std::move(e);
      return out;
    }
  }
  out.distance = CappedDistance::above(limit);
  return out;
}

bool f_value_consistent(const CwsCode& q, const PauliOperator& e, const KlResult& result) {
  if (!result.detected) return false;
  const bool zero = result.f.is_zero();
  if (!zero && !result.f.is_unit_sign()) return false;
  return zero == !classicalize(q.graph(), e).is_zero();
}

void write_kl_matrix(std::ostream& out, const CwsCode& q, const PauliOperator& e,
                     std::size_t cap) {
  const auto words = codewords(q, cap);
  const auto flags = out.flags();
  out << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      const auto v = inner_product(words[i], apply_pauli(words[j], e)).value();
      out << (j ? "  " : "") << std::setw(7) << v.real() << (v.imag() < 0 ? "-" : "+")
          << std::setw(6) << std::abs(v.imag()) << 'i';
    }
    out << '\n';
  }
  out.flags(flags);
}

}  // namespace qmindist::kl
