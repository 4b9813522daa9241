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

#include "oracles.hpp"
#include "qmindist/codes.hpp"

using namespace qmindist;

TEST(LinearCode, FromParityCheck) {
  const auto rep = LinearCode::from_parity_check(oracle::repetition3());
  EXPECT_EQ(rep.dimension(), 1u);
  EXPECT_EQ(rep.kernel()[0].to_string(), "111");
  EXPECT_EQ(LinearCode::from_parity_check(BitMatrix::identity(4)).dimension(), 0u);
  const auto ham = LinearCode::from_parity_check(oracle::hamming74());
  EXPECT_EQ(ham.dimension(), 4u);
  EXPECT_EQ(ham.check_rank(), 3u);
}

TEST(LinearCode, RankDeficientCheck) {
  const auto h = BitMatrix::from_strings({"110", "011", "101"});
  const auto code = LinearCode::from_parity_check(h);
  EXPECT_EQ(code.dimension(), 1u);
  EXPECT_EQ(min_distance(code), 3u);
}

TEST(MinDistance, Examples) {
  const auto rep = LinearCode::from_parity_check(oracle::repetition3());
  const auto parity = LinearCode::from_parity_check(BitMatrix::from_strings({"111"}));
  const auto ham = LinearCode::from_parity_check(oracle::hamming74());
  for (auto strategy : {DistanceStrategy::kGraySweep, DistanceStrategy::kWeightOrdered}) {
    MinDistanceOptions o;
    o.strategy = strategy;
    EXPECT_EQ(min_distance(rep, o), 3u);
    EXPECT_EQ(min_distance(parity, o), 2u);
    EXPECT_EQ(min_distance(ham, o), 3u);
  }
  EXPECT_THROW(min_distance(LinearCode::from_parity_check(BitMatrix::identity(3))), NoNonzeroCodeword);
}

TEST(MinDistance, WeightThreeHammingWords) {
  const auto words = minimum_weight_codewords(LinearCode::from_parity_check(oracle::hamming74()));
  ASSERT_EQ(words.size(), 7u);
  for (std::size_t i = 0; i + 1 < words.size(); ++i) EXPECT_TRUE(lex_less(words[i], words[i + 1]));
}

TEST(Detects, Examples) {
  const auto rep = LinearCode::from_parity_check(oracle::repetition3());
  EXPECT_TRUE(detects(rep, BitVector(3)));
  EXPECT_FALSE(detects(rep, BitVector::from_string("111")));
  EXPECT_TRUE(detects(rep, BitVector::from_string("100")));
  EXPECT_THROW(detects(rep, BitVector(4)), std::invalid_argument);
}

TEST(UsesAllComponents, Examples) {
  EXPECT_TRUE(uses_all_components(LinearCode::from_parity_check(oracle::repetition3())));
  EXPECT_FALSE(uses_all_components(LinearCode::from_parity_check(pad(oracle::repetition3(), 5))));
  EXPECT_FALSE(uses_all_components(LinearCode::from_parity_check(BitMatrix::identity(3))));
}

TEST(Pad, Examples) {
  EXPECT_EQ(pad(oracle::repetition3(), 3), oracle::repetition3());
  const auto padded = pad(oracle::repetition3(), 5);
  EXPECT_EQ(padded.rows(), 4u);
  EXPECT_EQ(padded.cols(), 5u);
  const auto code = LinearCode::from_parity_check(padded);
  ASSERT_EQ(code.dimension(), 1u);
  EXPECT_EQ(code.kernel()[0].to_string(), "11100");
  EXPECT_EQ(min_distance(LinearCode::from_parity_check(pad(oracle::hamming74(), 13))), 3u);
  EXPECT_THROW(pad(oracle::repetition3(), 2), std::invalid_argument);
}

TEST(CodesProperties, StrategiesAgreeWithBruteForce) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = len(rng);
    const auto h = oracle::random_check(rng, n);
    const auto code = LinearCode::from_parity_check(h);
    const auto words = oracle::all_codewords(oracle::rows_of(h), static_cast<int>(n));
    EXPECT_EQ(words.size(), std::size_t{1} << code.dimension());

    MinDistanceOptions gray{DistanceStrategy::kGraySweep};
    MinDistanceOptions ordered{DistanceStrategy::kWeightOrdered};
    MinDistanceOptions threaded{DistanceStrategy::kGraySweep, 24, 3};
    const auto d = min_distance(code, gray);
    EXPECT_EQ(static_cast<int>(d), oracle::min_distance(words));
    EXPECT_EQ(min_distance(code, ordered), d);
    EXPECT_EQ(min_distance(code, threaded), d);

    // detects is false exactly on the nonzero codewords.
    std::size_t undetected = 0;
    for (oracle::Mask v = 0; v < (oracle::Mask{1} << n); ++v) {
      if (!detects(code, oracle::from_mask(v, n))) ++undetected;
    }
    EXPECT_EQ(undetected, (std::size_t{1} << code.dimension()) - 1);

    for (std::size_t m : {n, n + 1, n + 4}) {
      EXPECT_EQ(min_distance(LinearCode::from_parity_check(pad(h, m))), d);
    }
  }
}
