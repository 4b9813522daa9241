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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qmindist/pauli.hpp"
#include "qmindist/search.hpp"

using namespace qmindist;

namespace {

PauliOperator xz(const char* x, const char* z) {
  return PauliOperator(BitVector::from_string(x), BitVector::from_string(z));
}

PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n) {
  PauliOperator p(n);
  std::uniform_int_distribution<int> letter(0, 3);
  for (std::size_t i = 0; i < n; ++i) p.set_letter(i, "IXYZ"[letter(rng)]);
  return p;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Pauli, Weight) {
  EXPECT_EQ(weight(PauliOperator::identity(4)), 0u);
  EXPECT_EQ(weight(xz("1100", "0110")), 3u);
  EXPECT_EQ(weight(xz("1", "1")), 1u);
}

TEST(Pauli, Commutes) {
  EXPECT_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
  EXPECT_TRUE(commutes(parse_pauli("X"), parse_pauli("X")));
  EXPECT_FALSE(commutes(xz("100", "000"), xz("000", "110")));
  EXPECT_THROW(commutes(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
}

TEST(Pauli, Compose) {
  const auto p = parse_pauli("XYZI");
  EXPECT_TRUE(compose(p, p).is_identity());
  EXPECT_EQ(compose(xz("100", "000"), xz("000", "100")), xz("100", "100"));
  // Standard generators of the triangle graph: X1 Z2 Z3 and Z1 X2 Z3.
  EXPECT_EQ(compose(xz("100", "011"), xz("010", "101")), xz("110", "110"));
}

TEST(Pauli, ParseFormat) {
  EXPECT_TRUE(parse_pauli("III").is_identity());
  EXPECT_EQ(parse_pauli("III").num_qubits(), 3u);
  const auto y = parse_pauli("YIZ");
  EXPECT_EQ(y.x().to_string(), "100");
  EXPECT_EQ(y.z().to_string(), "101");
  const auto xzp = parse_pauli("XZ");
  EXPECT_EQ(xzp.x().to_string(), "10");
  EXPECT_EQ(xzp.z().to_string(), "01");
  EXPECT_EQ(format(y), "YIZ");
  EXPECT_EQ(y.letter(0), 'Y');
  EXPECT_THROW(parse_pauli("XQ"), std::invalid_argument);
}

TEST(Pauli, Properties) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto p = random_pauli(rng, n);
    const auto q = random_pauli(rng, n);
    EXPECT_EQ(commutes(p, q), commutes(q, p));
    EXPECT_TRUE(commutes(p, p));
    EXPECT_TRUE(commutes(p, PauliOperator::identity(n)));
    EXPECT_LE(weight(compose(p, q)), weight(p) + weight(q));
    EXPECT_EQ(parse_pauli(format(p)), p);
  }
}

TEST(Enumerate, SmallCounts) {
  auto e = enumerate_paulis(2, 1);
  std::vector<std::string> got;
  while (auto p = e.next()) got.push_back(p->to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"XI", "YI", "ZI", "IX", "IY", "IZ"}));
  EXPECT_FALSE(e.next().has_value());

  auto empty = enumerate_paulis(3, 0);
  EXPECT_FALSE(empty.next().has_value());
  EXPECT_THROW(enumerate_paulis(3, 4), std::invalid_argument);
}

TEST(Enumerate, ClosedFormCount) {
  EXPECT_EQ(pauli_count(307, 2), 423'660u);
  EXPECT_EQ(pauli_count(307, 2), 9 * binom(307, 2) + 3 * 307);
  EXPECT_EQ(pauli_count(1407, 2), 9 * binom(1407, 2) + 3 * 1407);
  EXPECT_EQ(pauli_count_exact(5, 0), 1u);
  EXPECT_EQ(pauli_count(100000, 50), UINT64_MAX);
}

TEST(Enumerate, OrderAndUniqueness) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t w = 0; w <= n; ++w) {
      auto e = enumerate_paulis(n, w);
      std::set<std::string> seen;
      std::size_t last_weight = 0;
      std::vector<std::size_t> last_support;
      std::string last_letters;
      while (auto p = e.next()) {
        EXPECT_FALSE(p->is_identity());
        EXPECT_LE(p->weight(), w);
        EXPECT_TRUE(seen.insert(p->to_string()).second);
        const auto support = (p->x() | p->z()).support();
        std::string letters;
        for (auto s : support) letters.push_back(p->letter(s));
        if (p->weight() == last_weight) {
          EXPECT_TRUE(last_support < support || (last_support == support && last_letters < letters));
        } else {
          EXPECT_EQ(p->weight(), last_weight + 1);
        }
        last_weight = p->weight();
        last_support = support;
        last_letters = letters;
      }
      EXPECT_EQ(seen.size(), pauli_count(n, w));
    }
  }
}

TEST(CappedDistance, Semantics) {
  const auto e = CappedDistance::exact(3);
  EXPECT_TRUE(e.found());
  EXPECT_EQ(e.value(), 3u);
  EXPECT_EQ(e.to_string(), "3");
  EXPECT_THROW(e.cap(), std::logic_error);
  const auto a = CappedDistance::above(2);
  EXPECT_TRUE(a.above_cap());
  EXPECT_EQ(a.cap(), 2u);
  EXPECT_EQ(a.to_string(), ">2");
  EXPECT_THROW(a.value(), std::logic_error);
}

TEST(Search, FirstZeroSyndromeMatchesEnumeration) {
  // Syndrome of a Pauli = its x part on 5 sites; zero syndrome means pure Z.
  const std::size_t n = 5;
  SiteSyndromeTable table(n, 3, n);
  for (std::size_t s = 0; s < n; ++s) {
    table.set_bit(s, 0, s);
    table.set_bit(s, 1, s);
  }
  auto accept_all = [](auto, auto) { return true; };
  for (unsigned threads : {1u, 3u}) {
    const auto hit = find_first_zero_syndrome(table, 2, accept_all, {threads});
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(assignment_to_pauli(n, *hit).to_string(), "ZZIII");
    // Reject everything touching site 0.
    auto skip0 = [](std::span<const std::size_t> s, auto) { return s[0] != 0; };
    const auto later = find_first_zero_syndrome(table, 2, skip0, {threads});
    ASSERT_TRUE(later.has_value());
    EXPECT_EQ(assignment_to_pauli(n, *later).to_string(), "IZZII");
  }
  auto reject = [](auto, auto) { return false; };
  EXPECT_FALSE(find_first_zero_syndrome(table, 3, reject).has_value());
}
