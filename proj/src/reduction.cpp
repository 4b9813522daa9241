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

#include "qmindist/reduction.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qmindist/codes.hpp"
#include "qmindist/pauli.hpp"

namespace qmindist {

std::string to_string(ReductionMode mode) {
  switch (mode) {
    case ReductionMode::kPaper: return "Paper";
    case ReductionMode::kScaled: return "Scaled";
    case ReductionMode::kCustomM: return "CustomM";
  }
  return "?";
}

ReductionMode parse_mode(const std::string& s) {
  if (s == "Paper" || s == "paper") return ReductionMode::kPaper;
  if (s == "Scaled" || s == "scaled") return ReductionMode::kScaled;
  if (s == "CustomM" || s == "custom" || s == "custom-m") return ReductionMode::kCustomM;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

CwsCode ReductionInstance::code() const {
  return CwsCode(graph, LinearCode::from_parity_check(h_prime));
}

ReductionInstance reduce(const BitMatrix& h, std::size_t t, ReductionMode mode,
                         std::optional<std::uint64_t> custom_m) {
  const std::size_t n = h.cols();
  if (n == 0) throw std::invalid_argument("reduce: empty code");
  if (LinearCode::from_parity_check(h).dimension() == 0) {
    throw std::invalid_argument("reduce: code has dimension 0");
  }
  ReductionInstance inst;
  inst.t = t;
  inst.mode = mode;
  inst.source_shape = std::make_pair(h.rows(), h.cols());
  switch (mode) {
    case ReductionMode::kPaper: {
      const auto size = find_m(25 * static_cast<std::uint64_t>(n) * n);
      inst.m = size.m;
      inst.p = size.p;
      break;
    }
    case ReductionMode::kScaled: {
      const auto size = smallest_plane_at_least(n);
      inst.m = size.m;
      inst.p = size.p;
      inst.note = "smallest plane with m >= n; no distance guarantee";
      break;
    }
    case ReductionMode::kCustomM: {
      if (!custom_m) throw std::invalid_argument("reduce: CustomM needs m");
      inst.m = *custom_m;
      inst.p = plane_order(inst.m);
      if (inst.p == 0) {
        throw std::invalid_argument("reduce: m = " + std::to_string(inst.m) +
                                    " is not p^2+p+1 for a prime p");
      }
      if (inst.m < n) throw std::invalid_argument("reduce: m is smaller than n");
      break;
    }
  }
  if (2 * inst.p * inst.p < inst.m) throw std::logic_error("reduce: p < sqrt(m/2)");
  inst.h_prime = pad(h, inst.m);
  inst.graph = polarity_graph(inst.p);
  return inst;
}

InfeasibleSearch::InfeasibleSearch(std::uint64_t candidates, std::uint64_t limit)
    : std::runtime_error("sweep of " + std::to_string(candidates) +
                         " candidates exceeds the limit of " + std::to_string(limit) +
                         " (use --force)"),
      candidates_(candidates) {}

bool ReductionReport::probes_undetected() const {
  if (probes.empty()) return false;
  for (const auto& probe : probes) {
    if (!probe.undetected) return false;
  }
  return true;
}

InequalityChecks check_inequalities(std::size_t d, std::uint64_t p, std::uint64_t m) {
  using u128 = unsigned __int128;
  InequalityChecks out;
  out.dist_small = u128{25} * d * d <= m;
  out.p_large = u128{2} * p * p >= m;
  out.residual_large = d <= 1 || u128{16} * m > u128{225} * (d - 1) * (d - 1);
  return out;
}

ReductionReport verify_reduction(const ReductionInstance& inst, std::size_t w_max,
                                 const VerifyOptions& options) {
  if (w_max > inst.m) throw std::invalid_argument("verify: max weight exceeds m");
  ReductionReport report;
  report.w_max = w_max;
  report.candidates = pauli_count(inst.m, w_max);
  if (!options.force && report.candidates > options.candidate_limit) {
    throw InfeasibleSearch(report.candidates, options.candidate_limit);
  }
  const CwsCode q = inst.code();
  report.exhaustive = qdist(q, w_max, options.search);

  MinDistanceOptions md;
  md.threads = options.search.threads;
  report.code_distance = min_distance(q.code(), md);
  for (auto& c : minimum_weight_codewords(q.code(), md)) {
    const bool undetected = !detects(q, PauliOperator::z_only(c));
    report.probes.push_back({std::move(c), undetected});
  }
  report.inequalities = check_inequalities(report.code_distance, inst.p, inst.m);
  return report;
}

Decision decide_qmindist(const ReductionInstance& inst, const VerifyOptions& options) {
  Decision out;
  if (inst.t == 0) return out;
  const std::size_t w = std::min<std::size_t>(inst.t, inst.m);
  const auto candidates = pauli_count(inst.m, w);
  if (!options.force && candidates > options.candidate_limit) {
    throw InfeasibleSearch(candidates, options.candidate_limit);
  }
  auto search = qdist(inst.code(), w, options.search);
  out.yes = search.distance.found();
  out.witness = std::move(search.witness);
  return out;
}

Rational parse_rational(const std::string& s) {
  auto parse_uint = [&](std::string_view part) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("not a nonnegative rational: '" + s + "'");
    }
    return v;
  };
  const std::string_view view(s);
  Rational r;
  if (const auto slash = view.find('/'); slash != std::string_view::npos) {
    r.num = parse_uint(view.substr(0, slash));
    r.den = parse_uint(view.substr(slash + 1));
  } else if (const auto dot = view.find('.'); dot != std::string_view::npos) {
    const auto frac = view.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("too many decimals: '" + s + "'");
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    const std::uint64_t whole = dot == 0 ? 0 : parse_uint(view.substr(0, dot));
    r.num = whole * r.den + (frac.empty() ? 0 : parse_uint(frac));
  } else {
    r.num = parse_uint(view);
  }
  if (r.den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return r;
}

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

GapParams GapParams::multiplicative(Rational gamma) {
  if (gamma.num < gamma.den) throw std::invalid_argument("gamma must be >= 1");
  return {GapKind::kMultiplicative, gamma};
}

GapParams GapParams::additive(Rational tau) {
  if (tau.num == 0) throw std::invalid_argument("tau must be > 0");
  return {GapKind::kAdditive, tau};
}

DistanceBounds DistanceBounds::from(const CappedDistance& d) {
  if (d.found()) return exact(d.value());
  return {d.cap() + 1, std::nullopt};
}

std::string to_string(GapAnswer a) {
  switch (a) {
    case GapAnswer::kYes: return "YES";
    case GapAnswer::kNo: return "NO";
    case GapAnswer::kPromiseViolated: return "PROMISE_VIOLATED";
    case GapAnswer::kUndetermined: return "UNDETERMINED";
  }
  return "?";
}

namespace {

// d lies strictly above the NO threshold.
bool above_threshold(std::size_t d, std::size_t t, std::size_t n, const GapParams& params) {
  using u128 = unsigned __int128;
  const Rational& r = params.value;
  if (params.kind == GapKind::kMultiplicative) return u128{d} * r.den > u128{r.num} * t;
  if (d <= t) return false;
  const u128 gap = d - t;
  return gap * gap * r.den * r.den > u128{r.num} * r.num * n;
}

}  // namespace

GapAnswer gap_verdict(std::size_t t, std::size_t n, const GapParams& params,
                      const DistanceBounds& measured) {
  if (measured.upper && *measured.upper <= t) return GapAnswer::kYes;
  if (above_threshold(measured.lower, t, n, params)) return GapAnswer::kNo;
  if (measured.lower > t && measured.upper && !above_threshold(*measured.upper, t, n, params)) {
    return GapAnswer::kPromiseViolated;
  }
  return GapAnswer::kUndetermined;
}

GapAnswer gap_verdict(const ReductionInstance& inst, const GapParams& params,
                      const DistanceBounds& measured) {
  return gap_verdict(inst.t, static_cast<std::size_t>(inst.m), params, measured);
}

namespace {

void expect_token(std::istream& in, const std::string& token) {
  std::string got;
  if (!(in >> got) || got != token) {
    throw std::invalid_argument("instance: expected '" + token + "', got '" + got + "'");
  }
}

}  // namespace

ReductionInstance read_instance(std::istream& in) {
  std::string magic;
  std::getline(in, magic);
  if (magic != "QMINDIST v1") throw std::invalid_argument("instance: missing 'QMINDIST v1' header");
  ReductionInstance inst;
  long long t = -1;
  expect_token(in, "t");
  if (!(in >> t) || t < 0) throw std::invalid_argument("instance: bad t");
  inst.t = static_cast<std::size_t>(t);
  std::string mode;
  expect_token(in, "mode");
  if (!(in >> mode)) throw std::invalid_argument("instance: missing mode");
  inst.mode = parse_mode(mode);
  expect_token(in, "p");
  if (!(in >> inst.p)) throw std::invalid_argument("instance: bad p");
  expect_token(in, "m");
  if (!(in >> inst.m)) throw std::invalid_argument("instance: bad m");
  expect_token(in, "[H]");
  inst.h_prime = read_matrix(in);
  expect_token(in, "[G]");
  inst.graph = read_graph(in);
  if (inst.h_prime.cols() != inst.m || inst.graph.num_vertices() != inst.m) {
    throw std::invalid_argument("instance: H and G sizes do not match m");
  }
  if (plane_order(inst.m) != inst.p) throw std::invalid_argument("instance: m != p^2+p+1");
  return inst;
}

void write_instance(std::ostream& out, const ReductionInstance& inst) {
  out << "QMINDIST v1\n";
  out << "t " << inst.t << '\n';
  out << "mode " << to_string(inst.mode) << " p " << inst.p << " m " << inst.m << '\n';
  out << "[H]\n";
  write_matrix(out, inst.h_prime);
  out << "[G]\n";
  write_graph(out, inst.graph);
}

ReductionInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_instance(in);
}

void save_instance(const std::string& path, const ReductionInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_instance(out, inst);
}

}  // namespace qmindist
