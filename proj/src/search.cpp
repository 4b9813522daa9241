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

#include "qmindist/search.hpp"

#include <limits>
#include <mutex>
#include <stdexcept>

namespace qmindist {

std::size_t CappedDistance::value() const {
  if (!found_) throw std::logic_error("distance exceeds the search cap");
  return v_;
}

std::size_t CappedDistance::cap() const {
  if (found_) throw std::logic_error("distance was found below the cap");
  return v_;
}

std::string CappedDistance::to_string() const {
  return found_ ? std::to_string(v_) : ">" + std::to_string(v_);
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const SiteSyndromeTable& table, std::size_t weight, const LeafPredicate& accept)
      : table_(table),
        weight_(weight),
        accept_(accept),
        support_(weight),
        letters_(weight),
        acc_((weight + 1) * table.words(), 0) {}

  /// Searches all supports whose first site is `lead`.
  bool run(std::size_t lead) {
    support_[0] = lead;
    return choose_support(1);
  }

  SupportAssignment result() const { return {support_, letters_}; }

 private:
  bool choose_support(std::size_t depth) {
    if (depth == weight_) return choose_letters(0);
    const std::size_t last = table_.sites() - (weight_ - depth);
    for (std::size_t s = support_[depth - 1] + 1; s <= last; ++s) {
      support_[depth] = s;
      if (choose_support(depth + 1)) return true;
    }
    return false;
  }

  bool choose_letters(std::size_t depth) {
    const std::size_t w = table_.words();
    std::span<const Word> prev{acc_.data() + depth * w, w};
    std::span<Word> cur{acc_.data() + (depth + 1) * w, w};
    for (std::uint8_t l = 0; l < table_.letters(); ++l) {
      letters_[depth] = l;
      auto contrib = table_.entry(support_[depth], l);
      for (std::size_t i = 0; i < w; ++i) cur[i] = prev[i] ^ contrib[i];
      if (depth + 1 == weight_) {
        if (detail::all_zero(cur) && accept_(support_, letters_)) return true;
      } else if (choose_letters(depth + 1)) {
        return true;
      }
    }
    return false;
  }

  const SiteSyndromeTable& table_;
  std::size_t weight_;
  const LeafPredicate& accept_;
  std::vector<std::size_t> support_;
  std::vector<std::uint8_t> letters_;
  std::vector<Word> acc_;  // running syndrome per letter depth; slot 0 stays zero
};

}  // namespace

std::optional<SupportAssignment> find_first_zero_syndrome(const SiteSyndromeTable& table,
                                                          std::size_t weight,
                                                          const LeafPredicate& accept,
                                                          const SearchOptions& options) {
  const std::size_t n = table.sites();
  if (weight == 0 || weight > n) return std::nullopt;
  const std::size_t partitions = n - weight + 1;

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::mutex mu;
  std::optional<SupportAssignment> found;

  parallel_for(partitions, options.threads, [&](std::size_t lead) {
    if (lead > best.load()) return;
    PartitionSearch search(table, weight, accept);
    if (!search.run(lead)) return;
    std::lock_guard lock(mu);
    if (lead < best.load()) {
      best.store(lead);
      found = search.result();
    }
  });
  return found;
}

PauliOperator assignment_to_pauli(std::size_t n, const SupportAssignment& a) {
  PauliOperator p(n);
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    p.set_letter(a.support[i], kPauliLetters[a.letters[i]]);
  }
  return p;
}

}  // namespace qmindist
