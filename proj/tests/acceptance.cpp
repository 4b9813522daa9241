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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmindist/atomsets.hpp"
#include "qmindist/codes.hpp"
#include "qmindist/cws.hpp"
#include "qmindist/graphs.hpp"
#include "qmindist/kloracle.hpp"
#include "qmindist/reduction.hpp"
#include "qmindist/sweeps.hpp"

using namespace qmindist;

namespace {

BitMatrix repetition3() { return BitMatrix::from_strings({"110", "011"}); }
BitMatrix hamming74() { return BitMatrix::from_strings({"1010101", "0110011", "0001111"}); }

SimpleGraph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [a, b] : e) {
    if (a > b) std::swap(a, b);
  }
  std::sort(e.begin(), e.end());
  return SimpleGraph::from_edges(10, e);
}

// Five-cycle graph with the even-weight complement code: [[5,1,3]].
CwsCode ring5() {
  const auto g = SimpleGraph::from_edges(5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  return CwsCode(g, LinearCode::from_parity_check(
                        BitMatrix::from_strings({"11000", "01100", "00110", "00011"})));
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.1fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << title << " (" << time << ") "
            << o.detail << std::endl;
}

// Shared by criteria 4 and 5.
std::vector<CwsCode> triangle_instances() {
  std::vector<CwsCode> out;
  std::mt19937_64 rng(20260401);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  for (int i = 0; i < 240; ++i) out.push_back(random_cws(rng, len(rng)));
  // Extra draws with qdist >= 2, so that the f-value check sees more than
  // the identity.
  std::uniform_int_distribution<std::size_t> mid(4, 8);
  int extra = 0;
  for (int attempt = 0; attempt < 200000 && extra < 60; ++attempt) {
    CwsCode q = random_cws(rng, mid(rng));
    if (qdist(q, 1).distance.above_cap()) {
      out.push_back(std::move(q));
      ++extra;
    }
  }
  out.push_back(ring5());
  return out;
}

std::vector<TriangleReport> triangle_reports;

}  // namespace

int main() {
  run(1, "gdist in {delta, delta+1} for every 4-cycle-free graph on <= 7 vertices", [] {
    std::uint64_t graphs = 0, free = 0, violations = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
      const DegreeBoundSummary s = degree_bound_sweep(n);
      graphs += s.graphs;
      free += s.four_cycle_free;
      violations += s.violations;
    }
    std::ostringstream d;
    d << "graphs=" << graphs << " four_cycle_free=" << free << " violations=" << violations;
    return Outcome{violations == 0 && graphs == 2097152 + 32768 + 1024 + 64 + 8 + 2 + 1, d.str()};
  });

  run(2, "polarity graphs for p in {2,3,5,7,11,13}", [] {
    bool ok = true;
    std::ostringstream d;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      const SimpleGraph g = polarity_graph(p);
      bool degrees = true;
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        degrees = degrees && (g.degree(v) == p || g.degree(v) == p + 1);
      }
      std::size_t crowded = 0;
      for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        for (std::size_t j = i + 1; j < g.num_vertices(); ++j) crowded += g.common_neighbors(i, j) >= 2;
      }
      const bool here = g.num_vertices() == p * p + p + 1 && degrees && crowded == 0;
      ok = ok && here;
      d << "p=" << p << ":" << (here ? "ok" : "bad") << " ";
    }
    // Points (100) (101) (110) (111) (010) (011) (001), orthogonal mod 2.
    const std::vector<Edge> fano = {{0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4},
                                    {2, 3}, {2, 6}, {3, 5}, {4, 6}};
    const bool exact = polarity_graph(2) == SimpleGraph::from_edges(7, fano);
    d << "p2_exact=" << exact;
    return Outcome{ok && exact, d.str()};
  });

  run(3, "find_m(n) = p^2+p+1 in [n, 7n] for 8 <= n <= 10000", [] {
    std::size_t bad = 0;
    for (std::uint64_t n = 8; n <= 10000; ++n) {
      const ProjectivePlaneSize s = find_m(n);
      if (!is_prime(s.p) || s.m != s.p * s.p + s.p + 1 || s.m < n || s.m > 7 * n) ++bad;
    }
    return Outcome{bad == 0, "bad=" + std::to_string(bad)};
  });

  const std::vector<CwsCode> instances = triangle_instances();
  run(4, "classicalized, stabilizer and Knill-Laflamme distances and detection agree", [&] {
    std::size_t disagree = 0, mismatches = 0;
    std::uint64_t paulis = 0;
    for (const CwsCode& q : instances) {
      triangle_reports.push_back(oracle_triangle(q));
      const TriangleReport& r = triangle_reports.back();
      disagree += !r.distances_agree();
      mismatches += r.detection_mismatches;
      paulis += r.paulis_checked;
    }
    std::ostringstream d;
    d << "instances=" << instances.size() << " distance_disagreements=" << disagree
      << " paulis=" << paulis << " detection_mismatches=" << mismatches;
    return Outcome{instances.size() >= 200 && disagree == 0 && mismatches == 0, d.str()};
  });

  run(5, "f(E) in {0, +1, -1}, nonzero iff Cl_G(E) = 0, below qdist", [&] {
    std::uint64_t checked = 0, bad = 0;
    std::size_t deep = 0;
    for (const TriangleReport& r : triangle_reports) {
      checked += r.f_checked;
      bad += r.f_failures;
      deep += r.classicalized.found() && r.classicalized.value() >= 2;
    }
    std::ostringstream d;
    d << "paulis=" << checked << " failures=" << bad << " instances_with_qdist>=2=" << deep;
    return Outcome{triangle_reports.size() == instances.size() && bad == 0 && checked > 0, d.str()};
  });

  std::vector<std::pair<std::string, ReductionReport>> paper_reports;
  run(6, "paper-mode reduction preserves distance 3", [&] {
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, h, m, candidates] :
         {std::tuple{"rep3", repetition3(), 307ull, 423660ull},
          std::tuple{"hamming", hamming74(), 1407ull, 8906310ull}}) {
      const ReductionInstance inst = reduce(h, 2, ReductionMode::kPaper);
      const ReductionReport r = verify_reduction(inst, 2);
      bool probe_weight = !r.probes.empty();
      for (const WitnessProbe& p : r.probes) probe_weight = probe_weight && p.codeword.weight() == 3;
      const bool here = inst.m == m && r.candidates == candidates && r.exhaustive.distance.above_cap() &&
                        r.probes_undetected() && probe_weight && r.code_distance == 3;
      ok = ok && here;
      d << name << ": m=" << inst.m << " candidates=" << r.candidates
        << " w<=2 " << r.exhaustive.distance.to_string() << " probes=" << r.probes.size() << " ";
      paper_reports.emplace_back(name, r);
    }
    return Outcome{ok, d.str()};
  });

  run(7, "inequalities 25d^2 <= m, 2p^2 >= m, 4sqrt(m)/15 > d-1", [&] {
    bool ok = paper_reports.size() == 2;
    std::ostringstream d;
    for (const auto& [name, r] : paper_reports) {
      ok = ok && r.inequalities.all();
      d << name << ":" << r.inequalities.dist_small << r.inequalities.p_large
        << r.inequalities.residual_large << " ";
    }
    return Outcome{ok, d.str()};
  });

  run(8, "zero-sum column subsets of (I|A_G) on <= 6 vertices and the case claims", [] {
    ZeroSumSummary s;
    for (std::size_t n = 1; n <= 6; ++n) s += zero_sum_sweep(n);
    ZeroSumSummary extra;
    for (const SimpleGraph& g : {polarity_graph(2), polarity_graph(3), petersen()}) {
      extra += zero_sum_check_graph(g);
    }
    std::ostringstream d;
    d << "graphs=" << s.graphs << " subsets=" << s.subsets << " skipped=" << s.not_sets
      << " one_heavy=" << s.one_heavy << " all_heavy=" << s.all_heavy << " isolated_heavy=" << s.isolated_heavy_checked
      << " mid_size=" << s.mid_size_checked << " failures=" << s.failures()
      << " | polarity2,3+petersen subsets=" << extra.subsets << " mid_size=" << extra.mid_size_checked
      << " failures=" << extra.failures();
    if (s.mid_size_checked + extra.mid_size_checked == 0) d << " (mid-size hypotheses never met)";
    return Outcome{s.failures() == 0 && extra.failures() == 0, d.str()};
  });

  run(9, "custom-mode outputs with m = 307 are non-degenerate", [] {
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, h] : {std::pair{"rep3", repetition3()}, std::pair{"hamming", hamming74()}}) {
      const ReductionInstance inst = reduce(h, 2, ReductionMode::kCustomM, 307);
      const CwsCode q = inst.code();
      const DegeneracyReport r = analyze_degeneracy(q);
      const CappedDistance direct = gdist(q.graph(), 3).distance;
      const bool here = r.qdist == 3 && !r.degenerate && r.certified_by_min_degree &&
                        q.graph().min_degree() == 17 && direct == CappedDistance::above(3);
      ok = ok && here;
      d << name << ": qdist=" << r.qdist << " delta=" << q.graph().min_degree()
        << " gdist(cap 3)=" << direct.to_string() << " degenerate=" << r.degenerate << " ";
    }
    return Outcome{ok, d.str()};
  });

  run(10, "qdist <= min(delta+1, dist(C)) and gdist <= delta+1 on 500 random codes", [] {
    std::mt19937_64 rng(20260402);
    std::uniform_int_distribution<std::size_t> len(1, 10);
    std::size_t bad = 0;
    for (int i = 0; i < 500; ++i) {
      const CwsCode q = random_cws(rng, len(rng), true);
      const std::size_t n = q.num_qubits();
      const std::size_t delta = q.graph().min_degree();
      const std::size_t dc = min_distance(q.code());
      const DistanceSearch qd = qdist(q, n);
      const DistanceSearch gd = gdist(q.graph());
      if (!qd.distance.found() || qd.distance.value() > std::min(delta + 1, dc)) ++bad;
      if (!gd.distance.found() || gd.distance.value() > delta + 1) ++bad;
    }
    return Outcome{bad == 0, "instances=500 violations=" + std::to_string(bad)};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}
