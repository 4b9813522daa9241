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

#include <sstream>

#include "oracles.hpp"
#include "qmindist/atomsets.hpp"
#include "qmindist/cws.hpp"

using namespace qmindist;

namespace {

VectorSet set_of(std::size_t universe, std::initializer_list<const char*> bits) {
  std::vector<BitVector> members;
  for (auto b : bits) members.push_back(BitVector::from_string(b));
  return VectorSet(universe, std::move(members));
}

// A weight-delta vector together with the unit vectors of its support.
VectorSet one_heavy_set(std::size_t delta) {
  std::vector<BitVector> members;
  BitVector v(delta + 2);
  for (std::size_t i = 0; i < delta; ++i) {
    v.set(i);
    members.push_back(BitVector::unit(delta + 2, i));
  }
  members.push_back(v);
  return VectorSet(delta + 2, std::move(members));
}

std::vector<oracle::Mask> zero_sum_masks_brute(const std::vector<BitVector>& cols) {
  std::vector<oracle::Mask> out;
  for (oracle::Mask s = 1; s < (oracle::Mask{1} << cols.size()); ++s) {
    BitVector acc(cols.front().size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if ((s >> i) & 1u) acc ^= cols[i];
    }
    if (acc.is_zero()) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Atom, Examples) {
  EXPECT_TRUE(is_atom(set_of(3, {"110", "011"})));
  EXPECT_FALSE(is_atom(set_of(3, {"111", "110"})));
  EXPECT_TRUE(is_atom(VectorSet(3, identity_adjacency_columns(oracle::k3()))));
  EXPECT_THROW(set_of(3, {"110", "110"}), std::invalid_argument);
}

TEST(DegreeGap, Examples) {
  const auto g = degree_gap(set_of(3, {"100", "010", "011", "101"}));
  EXPECT_EQ(g.delta, 2u);
  EXPECT_EQ(g.light.size(), 2u);
  EXPECT_EQ(g.heavy.size(), 2u);
  const auto f = degree_gap(one_heavy_set(3));
  EXPECT_EQ(f.delta, 3u);
  EXPECT_EQ(f.light.size(), 3u);
  EXPECT_THROW(degree_gap(set_of(3, {"100"})), NoDegreeGap);
}

TEST(LargePartBound, Examples) {
  EXPECT_TRUE(check_large_part_bound(one_heavy_set(4)));
  EXPECT_TRUE(check_large_part_bound(set_of(3, {"100", "010", "011", "101"})));
  EXPECT_THROW(check_large_part_bound(VectorSet(3)), PreconditionViolated);
  EXPECT_THROW(check_large_part_bound(set_of(3, {"111", "110", "001"})), PreconditionViolated);
  EXPECT_THROW(check_large_part_bound(set_of(3, {"110", "011"})), PreconditionViolated);
  EXPECT_THROW(check_large_part_bound(set_of(3, {"000", "110", "100", "010"})), PreconditionViolated);
}

TEST(ZeroSum, Examples) {
  const auto cols = identity_adjacency_columns(oracle::k3());
  const auto subsets = enumerate_zero_sum_subsets(cols);
  EXPECT_EQ(subsets.size(), 7u);
  EXPECT_TRUE(enumerate_zero_sum_subsets({}).empty());
  EXPECT_TRUE(enumerate_zero_sum_subsets({BitVector::from_string("10"), BitVector::from_string("01")}).empty());
  // {e1, e2, u1, u2}
  EXPECT_NE(std::find(subsets.begin(), subsets.end(), std::vector<std::size_t>{0, 1, 3, 4}), subsets.end());
  for (std::size_t i = 0; i + 1 < subsets.size(); ++i) {
    EXPECT_TRUE(subsets[i].size() < subsets[i + 1].size() ||
                (subsets[i].size() == subsets[i + 1].size() && subsets[i] < subsets[i + 1]));
  }
  EXPECT_EQ(enumerate_zero_sum_subsets(cols, 3).size(),
            static_cast<std::size_t>(std::count_if(subsets.begin(), subsets.end(),
                                                   [](const auto& s) { return s.size() <= 3; })));
}

TEST(ZeroSum, MatchesBruteForce) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto cols = identity_adjacency_columns(oracle::random_graph(rng, n));
    const auto got = enumerate_zero_sum_subsets(cols);
    const auto brute = zero_sum_masks_brute(cols);
    ASSERT_EQ(got.size(), brute.size());
    EXPECT_EQ(got.size(), (std::size_t{1} << n) - 1);
  }
}

TEST(MinimalSetForm, Examples) {
  EXPECT_EQ(classify_minimal_set(one_heavy_set(3)), MinimalSetForm::kOneHeavy);
  EXPECT_EQ(classify_minimal_set(set_of(3, {"110", "011", "101"})), MinimalSetForm::kAllHeavy);
  EXPECT_EQ(classify_minimal_set(set_of(3, {"100", "010", "011", "101"})),
            MinimalSetForm::kNotSizeDeltaPlusOne);
  EXPECT_EQ(to_string(MinimalSetForm::kAllHeavy), "AllHeavy");
}

TEST(MinimalSetForm, AllHeavyFromTriangleColumns) {
  const auto cols = identity_adjacency_columns(oracle::k3());
  bool seen_all_heavy = false;
  for (const auto& s : enumerate_zero_sum_subsets(cols)) {
    const auto set = select(cols, s);
    if (classify_minimal_set(set) == MinimalSetForm::kAllHeavy) seen_all_heavy = true;
  }
  EXPECT_TRUE(seen_all_heavy);
}

TEST(CaseChecks, HypothesesAndConclusions) {
  const auto c = check_claims(one_heavy_set(3));
  EXPECT_FALSE(c.large_set_applies);
  EXPECT_FALSE(c.isolated_heavy_applies);
  EXPECT_FALSE(c.mid_size_applies);
  const auto k3 = check_claims(set_of(3, {"100", "010", "011", "101"}));
  EXPECT_TRUE(k3.large_set_applies);
  EXPECT_TRUE(k3.large_set_holds);
}

TEST(LargePartBound, ExhaustiveSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
      std::vector<Edge> edges;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
          if ((code >> bit) & 1u) edges.emplace_back(i, j);
        }
      }
      const auto g = SimpleGraph::from_edges(n, edges);
      if (has_four_cycle(g) || g.min_degree() < 2) continue;
      const auto cols = identity_adjacency_columns(g);
      for (const auto& s : enumerate_zero_sum_subsets(cols)) {
        const auto set = select(cols, s);
        ASSERT_TRUE(is_atom(set));
        EXPECT_TRUE(check_large_part_bound(set));
        const auto form = classify_minimal_set(set);
        EXPECT_NE(form, MinimalSetForm::kViolation);
      }
    }
  }
}

TEST(VectorSetIo, RoundTrip) {
  const auto s = set_of(3, {"100", "010", "011", "101"});
  std::stringstream out;
  write_vector_set(out, s);
  EXPECT_EQ(out.str(), "4 3\n100\n010\n011\n101\n");
  const auto back = read_vector_set(out);
  EXPECT_EQ(back.members(), s.members());
  std::stringstream bad("2 3\n100\n01\n");
  EXPECT_THROW(read_vector_set(bad), std::invalid_argument);
}
