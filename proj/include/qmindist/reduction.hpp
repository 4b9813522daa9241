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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmindist/cws.hpp"
#include "qmindist/gf2.hpp"
#include "qmindist/graphs.hpp"
#include "qmindist/search.hpp"

namespace qmindist {

enum class ReductionMode { kPaper, kScaled, kCustomM };

std::string to_string(ReductionMode mode);
/// Accepts "Paper"/"paper", "Scaled"/"scaled", "CustomM"/"custom".
ReductionMode parse_mode(const std::string& s);

/// A QMinDist instance (H', G, t) built from a classical instance (H, t).
struct ReductionInstance {
  BitMatrix h_prime;
  SimpleGraph graph;
  std::size_t t = 0;
  ReductionMode mode = ReductionMode::kPaper;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  /// Dimensions of the source H, when known (not serialized).
  std::optional<std::pair<std::size_t, std::size_t>> source_shape;
  std::string note;

  CwsCode code() const;
};

/// Builds the instance. Paper mode takes (m, p) = find_m(25 n^2), which needs
/// 25 n^2 > 7. Scaled mode takes the smallest plane with m >= n. CustomM takes
/// the caller's m, which must be p^2+p+1 with p prime and m >= n.
/// Throws std::invalid_argument on a bad m or when C(H) has k = 0.
ReductionInstance reduce(const BitMatrix& h, std::size_t t, ReductionMode mode,
                         std::optional<std::uint64_t> custom_m = std::nullopt);

/// Refusal to run a sweep whose candidate count exceeds the limit.
class InfeasibleSearch : public std::runtime_error {
 public:
  InfeasibleSearch(std::uint64_t candidates, std::uint64_t limit);
  std::uint64_t candidates() const { return candidates_; }

 private:
  std::uint64_t candidates_;
};

inline constexpr std::uint64_t kDefaultCandidateLimit = 1'000'000'000;

struct WitnessProbe {
  BitVector codeword;
  bool undetected = false;
};

struct InequalityChecks {
  bool dist_small = false;     // dist <= sqrt(m)/5, i.e. 25 d^2 <= m
  bool p_large = false;        // p >= sqrt(m)/sqrt(2), i.e. 2 p^2 >= m
  bool residual_large = false; // 4 sqrt(m)/15 > d - 1
  bool all() const { return dist_small && p_large && residual_large; }
};

struct VerifyOptions {
  bool force = false;
  std::uint64_t candidate_limit = kDefaultCandidateLimit;
  SearchOptions search;
};

struct ReductionReport {
  std::size_t w_max = 0;
  std::uint64_t candidates = 0;
  /// Minimum weight <= w_max of an undetected Pauli, or above the cap.
  DistanceSearch exhaustive;
  std::size_t code_distance = 0;
  std::vector<WitnessProbe> probes;
  InequalityChecks inequalities;

  bool probes_undetected() const;
};

/// 25 d^2 <= m, 2 p^2 >= m, and d - 1 < 4 sqrt(m)/15, all in integers.
InequalityChecks check_inequalities(std::size_t d, std::uint64_t p, std::uint64_t m);

/// Exhaustive sweep up to w_max, the Z(c) probe over minimum-weight codewords
/// of C(H'), and the inequality checks. Throws InfeasibleSearch when the
/// candidate count exceeds the limit and force is off; std::invalid_argument
/// if w_max > m.
ReductionReport verify_reduction(const ReductionInstance& inst, std::size_t w_max,
                                 const VerifyOptions& options = {});

struct Decision {
  bool yes = false;
  std::optional<PauliOperator> witness;
};

/// YES iff some undetected Pauli of weight <= t exists. t = 0 is NO.
Decision decide_qmindist(const ReductionInstance& inst, const VerifyOptions& options = {});

/// Nonnegative rational num/den.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Parses "3", "3/2" or "1.25". Throws std::invalid_argument.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

enum class GapKind { kMultiplicative, kAdditive };

struct GapParams {
  GapKind kind = GapKind::kMultiplicative;
  Rational value{1, 1};

  /// NO threshold gamma * t. Throws std::invalid_argument if gamma < 1.
  static GapParams multiplicative(Rational gamma);
  /// NO threshold t + tau * sqrt(n). Throws std::invalid_argument if tau <= 0.
  static GapParams additive(Rational tau);
};

/// What is known about a distance: lower <= d <= upper.
struct DistanceBounds {
  std::size_t lower = 0;
  std::optional<std::size_t> upper;

  static DistanceBounds exact(std::size_t d) { return {d, d}; }
  static DistanceBounds from(const CappedDistance& d);
};

enum class GapAnswer { kYes, kNo, kPromiseViolated, kUndetermined };

std::string to_string(GapAnswer a);

/// YES when d <= t, NO when d is above the threshold, PromiseViolated in
/// between. Undetermined when the bounds straddle a boundary. n is the qubit
/// count used by the additive threshold.
GapAnswer gap_verdict(std::size_t t, std::size_t n, const GapParams& params,
                      const DistanceBounds& measured);
GapAnswer gap_verdict(const ReductionInstance& inst, const GapParams& params,
                      const DistanceBounds& measured);

/// Text format: "QMINDIST v1", "t <int>", "mode <Mode> p <int> m <int>",
/// "[H]" and a matrix block, "[G]" and an edge-list block.
ReductionInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const ReductionInstance& inst);
ReductionInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const ReductionInstance& inst);

}  // namespace qmindist
