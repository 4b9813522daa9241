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
#include "qmindist/reduction.hpp"

using namespace qmindist;

TEST(Reduce, PaperRepetition) {
  const auto inst = reduce(oracle::repetition3(), 2, ReductionMode::kPaper);
  EXPECT_EQ(inst.m, 307u);
  EXPECT_EQ(inst.p, 17u);
  EXPECT_EQ(inst.h_prime.rows(), 306u);
  EXPECT_EQ(inst.h_prime.cols(), 307u);
  EXPECT_EQ(inst.graph, polarity_graph(17));
  EXPECT_EQ(inst.t, 2u);
}

TEST(Reduce, PaperHamming) {
  const auto inst = reduce(oracle::hamming74(), 2, ReductionMode::kPaper);
  EXPECT_EQ(inst.m, 1407u);
  EXPECT_EQ(inst.p, 37u);
}

TEST(Reduce, ScaledAndCustom) {
  const auto scaled = reduce(oracle::repetition3(), 2, ReductionMode::kScaled);
  EXPECT_EQ(scaled.m, 7u);
  EXPECT_EQ(scaled.p, 2u);
  const auto custom = reduce(oracle::repetition3(), 2, ReductionMode::kCustomM, 13);
  EXPECT_EQ(custom.p, 3u);
  EXPECT_THROW(reduce(oracle::repetition3(), 2, ReductionMode::kCustomM, 21), std::invalid_argument);
  EXPECT_THROW(reduce(oracle::repetition3(), 2, ReductionMode::kCustomM), std::invalid_argument);
  EXPECT_EQ(reduce(oracle::hamming74(), 2, ReductionMode::kCustomM, 7).h_prime, oracle::hamming74());
  EXPECT_THROW(reduce(BitMatrix::from_strings({"11000000"}), 2, ReductionMode::kCustomM, 7),
               std::invalid_argument);
  EXPECT_THROW(reduce(BitMatrix::identity(3), 2, ReductionMode::kPaper), std::invalid_argument);
}

TEST(Verify, RepetitionPaper) {
  const auto inst = reduce(oracle::repetition3(), 2, ReductionMode::kPaper);
  const auto report = verify_reduction(inst, 2);
  EXPECT_EQ(report.candidates, 423'660u);
  EXPECT_EQ(report.exhaustive.distance, CappedDistance::above(2));
  EXPECT_EQ(report.code_distance, 3u);
  ASSERT_EQ(report.probes.size(), 1u);
  EXPECT_EQ(report.probes[0].codeword.to_string(), "111" + std::string(304, '0'));
  EXPECT_TRUE(report.probes_undetected());
  EXPECT_TRUE(report.inequalities.all());

  EXPECT_EQ(verify_reduction(inst, 0).exhaustive.distance, CappedDistance::above(0));
  EXPECT_THROW(verify_reduction(inst, 308), std::invalid_argument);
}

TEST(Verify, FeasibilityGuard) {
  const auto inst = reduce(oracle::repetition3(), 2, ReductionMode::kPaper);
  VerifyOptions o;
  o.candidate_limit = 1000;
  EXPECT_THROW(verify_reduction(inst, 2, o), InfeasibleSearch);
  o.force = true;
  EXPECT_NO_THROW(verify_reduction(inst, 1, o));
}

TEST(Decide, Repetition) {
  auto inst = reduce(oracle::repetition3(), 3, ReductionMode::kPaper);
  const auto yes = decide_qmindist(inst);
  EXPECT_TRUE(yes.yes);
  ASSERT_TRUE(yes.witness);
  EXPECT_EQ(yes.witness->weight(), 3u);
  inst.t = 2;
  EXPECT_FALSE(decide_qmindist(inst).yes);
  inst.t = 0;
  EXPECT_FALSE(decide_qmindist(inst).yes);
}

TEST(Inequalities, IntegerForms) {
  EXPECT_TRUE(check_inequalities(3, 17, 307).all());
  EXPECT_TRUE(check_inequalities(3, 37, 1407).all());
  EXPECT_FALSE(check_inequalities(3, 2, 7).dist_small);
  EXPECT_TRUE(check_inequalities(1, 2, 7).residual_large);
  // 4 sqrt(7)/15 = 0.705..., so d - 1 = 1 fails.
  EXPECT_FALSE(check_inequalities(2, 2, 7).residual_large);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 101}) {
    EXPECT_TRUE(check_inequalities(1, p, p * p + p + 1).p_large);
  }
}

TEST(GapVerdict, Multiplicative) {
  const auto gamma = GapParams::multiplicative({2, 1});
  EXPECT_EQ(gap_verdict(3, 100, gamma, DistanceBounds::exact(3)), GapAnswer::kYes);
  EXPECT_EQ(gap_verdict(3, 100, gamma, DistanceBounds::exact(7)), GapAnswer::kNo);
  EXPECT_EQ(gap_verdict(3, 100, gamma, DistanceBounds::exact(5)), GapAnswer::kPromiseViolated);
  EXPECT_EQ(gap_verdict(3, 100, gamma, DistanceBounds::exact(6)), GapAnswer::kPromiseViolated);
  EXPECT_EQ(gap_verdict(3, 100, gamma, DistanceBounds::from(CappedDistance::above(2))),
            GapAnswer::kUndetermined);
  EXPECT_EQ(gap_verdict(3, 100, gamma, DistanceBounds::from(CappedDistance::above(6))),
            GapAnswer::kNo);
  EXPECT_THROW(GapParams::multiplicative({1, 2}), std::invalid_argument);
}

TEST(GapVerdict, Additive) {
  const auto tau = GapParams::additive({1, 2});  // threshold t + sqrt(n)/2
  // t = 3, n = 16: threshold 5.
  EXPECT_EQ(gap_verdict(3, 16, tau, DistanceBounds::exact(5)), GapAnswer::kPromiseViolated);
  EXPECT_EQ(gap_verdict(3, 16, tau, DistanceBounds::exact(6)), GapAnswer::kNo);
  EXPECT_EQ(gap_verdict(3, 16, tau, DistanceBounds::exact(2)), GapAnswer::kYes);
  EXPECT_THROW(GapParams::additive({0, 1}), std::invalid_argument);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("2").num, 2u);
  const auto r = parse_rational("3/2");
  EXPECT_EQ(r.num, 3u);
  EXPECT_EQ(r.den, 2u);
  const auto d = parse_rational("1.25");
  EXPECT_EQ(d.num, 125u);
  EXPECT_EQ(d.den, 100u);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(InstanceIo, RoundTrip) {
  for (auto mode : {ReductionMode::kPaper, ReductionMode::kScaled, ReductionMode::kCustomM}) {
    const auto inst = reduce(oracle::repetition3(), 2, mode, 31);
    std::stringstream s;
    write_instance(s, inst);
    const auto text = s.str();
    const auto back = read_instance(s);
    EXPECT_EQ(back.h_prime, inst.h_prime);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.t, inst.t);
    EXPECT_EQ(back.mode, inst.mode);
    EXPECT_EQ(back.p, inst.p);
    EXPECT_EQ(back.m, inst.m);
    std::stringstream again;
    write_instance(again, back);
    EXPECT_EQ(again.str(), text);
  }
  std::stringstream header("QMINDIST v1\nt 2\nmode Scaled p 2 m 7\n");
  EXPECT_TRUE(header.str().starts_with("QMINDIST v1\nt 2\nmode Scaled p 2 m 7\n"));
  std::stringstream bad("QMINDIST v2\n");
  EXPECT_THROW(read_instance(bad), std::invalid_argument);
}

TEST(ReductionProperties, DistancePreservationCustomM) {
  // Parity [3,2,2] with m = 133 >= 25 * 4, and rep3 with m = 307 >= 25 * 9.
  struct Case {
    BitMatrix h;
    std::uint64_t m;
    std::size_t d;
  };
  for (const auto& c : {Case{BitMatrix::from_strings({"111"}), 133, 2},
                        Case{oracle::repetition3(), 307, 3}}) {
    const auto inst = reduce(c.h, c.d, ReductionMode::kCustomM, c.m);
    const auto report = verify_reduction(inst, c.d - 1);
    EXPECT_TRUE(report.exhaustive.distance.above_cap());
    EXPECT_EQ(report.code_distance, c.d);
    EXPECT_TRUE(report.probes_undetected());
    EXPECT_TRUE(report.inequalities.all());
    const auto deg = analyze_degeneracy(inst.code());
    EXPECT_EQ(deg.qdist, c.d);
    EXPECT_FALSE(deg.degenerate);
  }
}

TEST(ReductionProperties, SmallCustomNonDegenerate) {
  // Small planes where gdist is searched directly.
  for (std::uint64_t m : {7u, 13u}) {
    const auto inst = reduce(oracle::repetition3(), 3, ReductionMode::kCustomM, m);
    const auto q = inst.code();
    const auto qd = qdist(q, m).distance.value();
    const auto gd = gdist(q.graph()).distance.value();
    EXPECT_GE(gd, qd);
    EXPECT_FALSE(is_degenerate(q));
  }
}
