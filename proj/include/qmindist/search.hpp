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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qmindist/gf2.hpp"
#include "qmindist/pauli.hpp"

namespace qmindist {

struct SearchOptions {
  unsigned threads = 1;
};

/// Result of a distance search bounded by a weight cap. Either an exact
/// distance, or the statement "no witness of weight <= cap exists".
class CappedDistance {
 public:
  static CappedDistance exact(std::size_t d) { return CappedDistance(true, d); }
  static CappedDistance above(std::size_t cap) { return CappedDistance(false, cap); }

  bool found() const { return found_; }
  bool above_cap() const { return !found_; }
  /// Throws std::logic_error when above the cap.
  std::size_t value() const;
  /// The cap that was exceeded. Throws std::logic_error when found.
  std::size_t cap() const;

  /// "3" or ">2".
  std::string to_string() const;

  friend bool operator==(const CappedDistance&, const CappedDistance&) = default;

 private:
  CappedDistance(bool found, std::size_t v) : found_(found), v_(v) {}
  bool found_;
  std::size_t v_;
};

struct DistanceSearch {
  CappedDistance distance = CappedDistance::above(0);
  std::optional<PauliOperator> witness;
};

/// Runs body(i) for i in [0, count) on up to `threads` workers, dynamic
/// scheduling in increasing index order.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  const unsigned width = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::jthread> pool;
  pool.reserve(width - 1);
  for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
}

/// Per-site, per-letter contributions to a linear syndrome. A candidate error
/// (support, letters) has syndrome equal to the XOR of its site entries.
class SiteSyndromeTable {
 public:
  SiteSyndromeTable(std::size_t sites, std::size_t letters, std::size_t bits)
      : sites_(sites), letters_(letters), words_(words_for(bits)),
        data_(sites * letters * words_, 0) {}

  std::size_t sites() const { return sites_; }
  std::size_t letters() const { return letters_; }
  std::size_t words() const { return words_; }

  std::span<Word> entry(std::size_t site, std::size_t letter) {
    return {data_.data() + (site * letters_ + letter) * words_, words_};
  }
  std::span<const Word> entry(std::size_t site, std::size_t letter) const {
    return {data_.data() + (site * letters_ + letter) * words_, words_};
  }
  void set_bit(std::size_t site, std::size_t letter, std::size_t bit) {
    entry(site, letter)[bit / kWordBits] |= Word{1} << (bit % kWordBits);
  }

 private:
  std::size_t sites_;
  std::size_t letters_;
  std::size_t words_;
  std::vector<Word> data_;
};

struct SupportAssignment {
  std::vector<std::size_t> support;
  std::vector<std::uint8_t> letters;
};

/// Accepts or rejects a zero-syndrome candidate.
using LeafPredicate =
    std::function<bool(std::span<const std::size_t>, std::span<const std::uint8_t>)>;

/// Among all assignments of exactly `weight` sites, visited with supports in
/// lexicographic order and, per support, letters in lexicographic order,
/// returns the first one whose syndrome is zero and which `accept` approves.
/// Work is partitioned by the leading support site; the answer does not depend
/// on the thread count.
std::optional<SupportAssignment> find_first_zero_syndrome(const SiteSyndromeTable& table,
                                                          std::size_t weight,
                                                          const LeafPredicate& accept,
                                                          const SearchOptions& options = {});

/// Builds the Pauli with letters 0=X, 1=Y, 2=Z on the given support.
PauliOperator assignment_to_pauli(std::size_t n, const SupportAssignment& a);

}  // namespace qmindist
