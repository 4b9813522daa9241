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

#include "qmindist/codes.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

namespace qmindist {

LinearCode LinearCode::from_parity_check(BitMatrix h) {
  RrefResult reduced = rref(h);
  std::vector<BitVector> kernel = kernel_basis(reduced);
  return LinearCode(std::move(h), std::move(reduced), std::move(kernel));
}

BitVector LinearCode::syndrome(const BitVector& v) const {
  if (v.size() != length()) throw std::invalid_argument("syndrome: length mismatch");
  BitVector s(reduced_.rank);
  for (std::size_t r = 0; r < reduced_.rank; ++r) {
    if (reduced_.matrix.row(r).dot(v)) s.set(r);
  }
  return s;
}

bool LinearCode::contains(const BitVector& v) const { return syndrome(v).is_zero(); }

namespace {

// Column i of the reduced check rows, as a one-letter syndrome table.
SiteSyndromeTable column_syndromes(const LinearCode& code) {
  const auto& red = code.reduced_check();
  SiteSyndromeTable table(code.length(), 1, red.rank);
  for (std::size_t r = 0; r < red.rank; ++r) {
    for (std::size_t c : red.matrix.row(r).support()) table.set_bit(c, 0, r);
  }
  return table;
}

std::size_t gray_sweep_distance(const LinearCode& code, unsigned threads) {
  const auto& basis = code.kernel();
  const std::size_t k = basis.size();
  const std::size_t words = words_for(code.length());
  // Split on the top `top` basis vectors; each partition sweeps the rest.
  const std::size_t top = std::min<std::size_t>(k, threads > 1 ? 6 : 0);
  const std::size_t low = k - top;
  const std::size_t partitions = std::size_t{1} << top;

  std::vector<std::size_t> best(partitions, std::numeric_limits<std::size_t>::max());
  parallel_for(partitions, threads, [&](std::size_t part) {
    std::vector<Word> cw(words, 0);
    for (std::size_t t = 0; t < top; ++t) {
      if ((part >> t) & 1u) detail::xor_words(cw, basis[low + t].words());
    }
    std::size_t local = std::numeric_limits<std::size_t>::max();
    if (part != 0) local = detail::popcount_words(cw);
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < steps; ++i) {
      detail::xor_words(cw, basis[static_cast<std::size_t>(std::countr_zero(i))].words());
      local = std::min(local, detail::popcount_words(cw));
    }
    best[part] = local;
  });
  return *std::min_element(best.begin(), best.end());
}

std::size_t weight_ordered_distance(const LinearCode& code, unsigned threads) {
  const SiteSyndromeTable table = column_syndromes(code);
  const LeafPredicate any = [](auto, auto) { return true; };
  for (std::size_t w = 1; w <= code.length(); ++w) {
    if (find_first_zero_syndrome(table, w, any, {threads})) return w;
  }
  throw NoNonzeroCodeword();
}

bool use_gray(const LinearCode& code, const MinDistanceOptions& options) {
  switch (options.strategy) {
    case DistanceStrategy::kGraySweep: return true;
    case DistanceStrategy::kWeightOrdered: return false;
    case DistanceStrategy::kAuto: break;
  }
  return code.dimension() <= options.gray_threshold;
}

}  // namespace

std::size_t min_distance(const LinearCode& code, const MinDistanceOptions& options) {
  if (code.dimension() == 0) throw NoNonzeroCodeword();
  if (use_gray(code, options)) return gray_sweep_distance(code, options.threads);
  return weight_ordered_distance(code, options.threads);
}

std::vector<BitVector> minimum_weight_codewords(const LinearCode& code,
                                                const MinDistanceOptions& options) {
  const std::size_t d = min_distance(code, options);
  std::vector<BitVector> out;
  if (use_gray(code, options)) {
    const auto& basis = code.kernel();
    BitVector cw(code.length());
    const std::uint64_t steps = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < steps; ++i) {
      cw ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
      if (cw.weight() == d) out.push_back(cw);
    }
  } else {
    // Every weight-d support with zero syndrome.
    const SiteSyndromeTable table = column_syndromes(code);
    std::mutex mu;
    const LeafPredicate collect = [&](std::span<const std::size_t> support, auto) {
      BitVector v(code.length());
      for (std::size_t s : support) v.set(s);
      std::lock_guard lock(mu);
      out.push_back(std::move(v));
      return false;
    };
    find_first_zero_syndrome(table, d, collect, {options.threads});
  }
  std::sort(out.begin(), out.end(), [](const BitVector& a, const BitVector& b) {
    return lex_less(a, b);
  });
  return out;
}

bool detects(const LinearCode& code, const BitVector& e) {
  if (e.size() != code.length()) throw std::invalid_argument("detects: length mismatch");
  return e.is_zero() || !code.contains(e);
}

bool uses_all_components(const LinearCode& code) {
  BitVector used(code.length());
  for (const auto& c : code.kernel()) used |= c;
  return code.length() > 0 && used.weight() == code.length();
}

BitMatrix pad(const BitMatrix& h, std::size_t m) {
  const std::size_t n = h.cols();
  if (m < n) throw std::invalid_argument("pad: target length smaller than code length");
  BitMatrix out(h.rows() + (m - n), m);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c : h.row(r).support()) out.set(r, c);
  }
  for (std::size_t i = 0; i < m - n; ++i) out.set(h.rows() + i, n + i);
  return out;
}

}  // namespace qmindist
