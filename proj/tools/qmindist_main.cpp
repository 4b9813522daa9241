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

// qmindist: command-line front end for the distance oracles, the polarity
// graph construction and the classical-to-quantum reduction.
//
// Exit codes: 0 success / YES, 1 NO, 2 bad input, 3 search refused or the
// answer is above the searched cap, 4 gap promise violated.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmindist/atomsets.hpp"
#include "qmindist/codes.hpp"
#include "qmindist/cws.hpp"
#include "qmindist/gf2.hpp"
#include "qmindist/graphs.hpp"
#include "qmindist/kloracle.hpp"
#include "qmindist/pauli.hpp"
#include "qmindist/reduction.hpp"
#include "qmindist/sweeps.hpp"

using namespace qmindist;

namespace {

enum Exit : int { kYes = 0, kNo = 1, kBadInput = 2, kAboveCap = 3, kPromiseViolated = 4 };

struct Args {
  std::vector<std::string> files;
  std::optional<std::size_t> max_weight;
  std::string mode = "paper";
  std::optional<std::uint64_t> custom_m;
  std::optional<std::string> gamma;
  std::optional<std::string> tau;
  unsigned threads = 1;
  bool force = false;
  bool decision = false;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::optional<std::size_t> t;
  std::uint64_t number = 0;
  std::size_t nmax = 7;
  std::size_t count = 200;
  std::string pauli;
  std::string graph;
  std::uint64_t limit = kDefaultCandidateLimit;
};

// "X0 Y5 Z9", or "I" for the identity.
std::string sparse(const PauliOperator& p) {
  std::string out;
  for (std::size_t i = 0; i < p.num_qubits(); ++i) {
    const char c = p.letter(i);
    if (c == 'I') continue;
    if (!out.empty()) out += ',';
    out += c;
    out += std::to_string(i);
  }
  return out.empty() ? "I" : out;
}

SearchOptions search_options(const Args& a) { return SearchOptions{std::max(1u, a.threads)}; }

VerifyOptions verify_options(const Args& a) {
  VerifyOptions o;
  o.force = a.force;
  o.candidate_limit = a.limit;
  o.search = search_options(a);
  return o;
}

// One argument is an instance file, two are a graph and a check matrix.
CwsCode load_code(const Args& a) {
  if (a.files.size() == 1) return load_instance(a.files[0]).code();
  if (a.files.size() == 2) {
    return CwsCode(load_graph(a.files[0]), LinearCode::from_parity_check(load_matrix(a.files[1])));
  }
  throw std::invalid_argument("expected INSTANCE or GRAPH CHECK_MATRIX");
}

void guard(std::size_t n, std::size_t w, const Args& a) {
  const std::uint64_t candidates = pauli_count(n, w);
  if (!a.force && candidates > a.limit) throw InfeasibleSearch(candidates, a.limit);
}

void print_distance(const char* label, const DistanceSearch& d) {
  std::cout << label << " = " << d.distance.to_string() << "\n";
  if (d.witness) std::cout << "witness = " << sparse(*d.witness) << "\n";
}

std::string result_fields(const DistanceSearch& d) {
  std::string s = d.distance.found() ? "status=found" : "status=above_cap";
  s += " dist=" + d.distance.to_string();
  if (d.witness) s += " witness=" + sparse(*d.witness);
  return s;
}

int classical_dist(const Args& a) {
  if (a.files.size() != 1) throw std::invalid_argument("classical-dist takes one check matrix");
  const LinearCode code = LinearCode::from_parity_check(load_matrix(a.files[0]));
  MinDistanceOptions o;
  o.threads = std::max(1u, a.threads);
  const std::size_t d = min_distance(code, o);
  std::cout << "n = " << code.length() << "\nk = " << code.dimension() << "\ndist = " << d << "\n";
  std::cout << "RESULT n=" << code.length() << " k=" << code.dimension() << " dist=" << d << "\n";
  return kYes;
}

int quantum_dist(const Args& a) {
  const CwsCode q = load_code(a);
  const std::size_t n = q.num_qubits();
  const std::size_t w = std::min(a.max_weight.value_or(n), n);
  guard(n, w, a);
  const DistanceSearch d = qdist(q, w, search_options(a));
  std::cout << "n = " << n << "\nk = " << q.dimension() << "\nmax weight = " << w << "\n";
  print_distance("qdist", d);
  std::cout << "RESULT " << result_fields(d) << "\n";
  return d.distance.found() ? kYes : kAboveCap;
}

int graph_dist(const Args& a) {
  if (a.files.size() != 1) throw std::invalid_argument("gdist takes one graph");
  const SimpleGraph g = load_graph(a.files[0]);
  std::optional<std::size_t> cap = a.max_weight;
  if (cap) guard(g.num_vertices(), *cap, a);
  const DistanceSearch d = gdist(g, cap, search_options(a));
  std::cout << "n = " << g.num_vertices() << "\nmin degree = " << g.min_degree() << "\n";
  print_distance("Gdist", d);
  std::cout << "RESULT " << result_fields(d) << "\n";
  return d.distance.found() ? kYes : kAboveCap;
}

int stab_dist(const Args& a) {
  if (a.files.size() != 1) throw std::invalid_argument("stab-dist takes one symplectic matrix");
  const SymplecticMatrix s = load_symplectic(a.files[0]);
  const std::size_t n = s.num_qubits();
  const std::size_t w = std::min(a.max_weight.value_or(n), n);
  guard(n, w, a);
  const DistanceSearch d = stab_distance(s, w, search_options(a));
  std::cout << "n = " << n << "\nrows = " << s.num_rows() << "\n";
  print_distance("dist", d);
  std::cout << "RESULT " << result_fields(d) << "\n";
  return d.distance.found() ? kYes : kAboveCap;
}

int to_stab(const Args& a) {
  const SymplecticMatrix s = to_stabilizer(load_code(a));
  if (a.output.empty()) {
    write_symplectic(std::cout, s);
  } else {
    save_symplectic(a.output, s);
    std::cout << "wrote " << a.output << "\n";
  }
  std::cout << "RESULT rows=" << s.num_rows() << " n=" << s.num_qubits() << "\n";
  return kYes;
}

int polarity(const Args& a) {
  const SimpleGraph g = polarity_graph(a.number);
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) max_degree = std::max(max_degree, g.degree(v));
  const bool c4 = has_four_cycle(g);
  std::cout << "p = " << a.number << "\nvertices = " << g.num_vertices() << "\nedges = " << g.num_edges()
            << "\ndegrees = " << g.min_degree() << ".." << max_degree
            << "\nabsolute points = " << count_absolute_points(a.number)
            << "\nfour-cycle free = " << (c4 ? "no" : "yes") << "\n";
  if (!a.output.empty()) {
    save_graph(a.output, g);
    std::cout << "wrote " << a.output << "\n";
  }
  std::cout << "RESULT vertices=" << g.num_vertices() << " edges=" << g.num_edges()
            << " min_degree=" << g.min_degree() << " max_degree=" << max_degree
            << " four_cycle_free=" << (c4 ? 0 : 1) << "\n";
  return kYes;
}

int find_m_cmd(const Args& a) {
  const ProjectivePlaneSize s = find_m(a.number);
  std::cout << "n = " << a.number << "\nm = " << s.m << "\np = " << s.p << "\n";
  std::cout << "RESULT m=" << s.m << " p=" << s.p << "\n";
  return kYes;
}

int reduce_cmd(const Args& a) {
  if (a.files.size() != 1) throw std::invalid_argument("reduce takes one check matrix");
  if (!a.t) throw std::invalid_argument("reduce needs -t");
  const ReductionInstance inst =
      reduce(load_matrix(a.files[0]), *a.t, parse_mode(a.mode), a.custom_m);
  std::cout << "mode = " << to_string(inst.mode) << "\np = " << inst.p << "\nm = " << inst.m
            << "\nt = " << inst.t << "\nedges = " << inst.graph.num_edges() << "\n";
  if (!inst.note.empty()) std::cout << "note: " << inst.note << "\n";
  if (a.output.empty()) {
    write_instance(std::cout, inst);
  } else {
    save_instance(a.output, inst);
    std::cout << "wrote " << a.output << "\n";
  }
  std::cout << "RESULT mode=" << to_string(inst.mode) << " p=" << inst.p << " m=" << inst.m
            << " t=" << inst.t << "\n";
  return kYes;
}

int verify_cmd(const Args& a) {
  if (a.files.size() != 1) throw std::invalid_argument("verify takes one instance");
  const ReductionInstance inst = load_instance(a.files[0]);
  const std::size_t w = a.max_weight.value_or(inst.t);
  const ReductionReport r = verify_reduction(inst, w, verify_options(a));
  const auto& iq = r.inequalities;
  std::cout << "m = " << inst.m << "\np = " << inst.p << "\nt = " << inst.t << "\nmax weight = " << w
            << "\ncandidates = " << r.candidates << "\n";
  print_distance("qdist", r.exhaustive);
  std::cout << "code distance = " << r.code_distance << "\nprobes = " << r.probes.size()
            << " (undetected: " << (r.probes_undetected() ? "all" : "not all") << ")\n"
            << "25 d^2 <= m: " << iq.dist_small << "\n2 p^2 >= m: " << iq.p_large
            << "\n4 sqrt(m)/15 > d - 1: " << iq.residual_large << "\n";

  int code = kYes;
  std::string answer = "NONE";
  if (a.decision) {
    if (r.exhaustive.distance.found()) {
      const bool yes = r.exhaustive.distance.value() <= inst.t;
      answer = yes ? "YES" : "NO";
      code = yes ? kYes : kNo;
    } else if (w >= inst.t) {
      answer = "NO";
      code = kNo;
    } else {
      answer = "ABOVE_CAP";
      code = kAboveCap;
    }
  }
  std::cout << "RESULT answer=" << answer << " " << result_fields(r.exhaustive)
            << " candidates=" << r.candidates << " code_dist=" << r.code_distance
            << " probes_undetected=" << r.probes_undetected() << " inequalities=" << iq.all()
            << "\n";
  return code;
}

int decide_cmd(const Args& a) {
  if (a.files.size() != 1) throw std::invalid_argument("decide takes one instance");
  const ReductionInstance inst = load_instance(a.files[0]);
  const Decision d = decide_qmindist(inst, verify_options(a));
  std::cout << "t = " << inst.t << "\nanswer = " << (d.yes ? "YES" : "NO") << "\n";
  if (d.witness) std::cout << "witness = " << sparse(*d.witness) << "\n";
  std::cout << "RESULT answer=" << (d.yes ? "YES" : "NO");
  if (d.witness) std::cout << " witness=" << sparse(*d.witness);
  std::cout << "\n";
  return d.yes ? kYes : kNo;
}

// floor of the NO threshold: floor(gamma t) or floor(t + tau sqrt(n)).
std::size_t no_threshold_floor(std::size_t t, std::size_t n, const GapParams& g) {
  const std::uint64_t num = g.value.num, den = g.value.den;
  if (g.kind == GapKind::kMultiplicative) return static_cast<std::size_t>(num * t / den);
  const unsigned __int128 sq = static_cast<unsigned __int128>(num) * num * n;
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(sq)));
  while (static_cast<unsigned __int128>(root) * root > sq) --root;
  while (static_cast<unsigned __int128>(root + 1) * (root + 1) <= sq) ++root;
  return t + static_cast<std::size_t>(root / den);
}

int gap_cmd(const Args& a) {
  if (a.files.size() != 1) throw std::invalid_argument("gap takes one instance");
  if (a.gamma.has_value() == a.tau.has_value()) throw std::invalid_argument("give exactly one of --gamma, --tau");
  const ReductionInstance inst = load_instance(a.files[0]);
  const GapParams params = a.gamma ? GapParams::multiplicative(parse_rational(*a.gamma))
                                   : GapParams::additive(parse_rational(*a.tau));
  const std::size_t m = static_cast<std::size_t>(inst.m);
  const std::size_t w = std::min(a.max_weight.value_or(no_threshold_floor(inst.t, m, params)), m);
  guard(m, w, a);
  const DistanceSearch d = qdist(inst.code(), w, search_options(a));
  const GapAnswer answer = gap_verdict(inst, params, DistanceBounds::from(d.distance));
  std::cout << "t = " << inst.t << "\n" << (a.gamma ? "gamma = " : "tau = ") << to_string(params.value)
            << "\nmax weight = " << w << "\n";
  print_distance("qdist", d);
  std::cout << "answer = " << to_string(answer) << "\n";
  std::cout << "RESULT answer=" << to_string(answer) << " " << result_fields(d) << "\n";
  switch (answer) {
    case GapAnswer::kYes: return kYes;
    case GapAnswer::kNo: return kNo;
    case GapAnswer::kPromiseViolated: return kPromiseViolated;
    case GapAnswer::kUndetermined: return kAboveCap;
  }
  return kAboveCap;
}

int check_degree_bound(const Args& a) {
  if (a.nmax > 8) throw std::invalid_argument("--nmax must be <= 8");
  std::uint64_t graphs = 0, free = 0, violations = 0;
  for (std::size_t n = 1; n <= a.nmax; ++n) {
    const DegreeBoundSummary s = degree_bound_sweep(n, search_options(a));
    std::cout << "n = " << n << ": graphs " << s.graphs << ", four-cycle free " << s.four_cycle_free
              << ", gdist = delta " << s.at_delta << ", gdist = delta+1 " << s.at_delta_plus_one
              << ", violations " << s.violations << "\n";
    if (s.first_violation) std::cout << "  first violation: graph code " << *s.first_violation << "\n";
    graphs += s.graphs;
    free += s.four_cycle_free;
    violations += s.violations;
  }
  std::cout << "RESULT graphs=" << graphs << " four_cycle_free=" << free << " violations=" << violations
            << "\n";
  return violations == 0 ? kYes : kNo;
}

void print_zero_sum(const ZeroSumSummary& s) {
  std::cout << "zero-sum subsets = " << s.subsets << "\nskipped (repeated or zero column) = "
            << s.not_sets << "\nnot ATOM = " << s.not_atom << "\nbound failures = " << s.bound_failures
            << "\none heavy = " << s.one_heavy << "\nall heavy = " << s.all_heavy
            << "\nminimal form failures = " << s.minimal_form_failures << "\nlarge set checked = " << s.large_set_checked
            << " failures = " << s.large_set_failures << "\nisolated heavy checked = " << s.isolated_heavy_checked
            << " failures = " << s.isolated_heavy_failures << "\nmid size checked = " << s.mid_size_checked
            << " failures = " << s.mid_size_failures << "\n";
}

int atom_check(const Args& a) {
  if (!a.graph.empty()) {
    const SimpleGraph g = load_graph(a.graph);
    if (has_four_cycle(g)) std::cout << "warning: graph has a four-cycle\n";
    const ZeroSumSummary s = zero_sum_check_graph(g);
    print_zero_sum(s);
    std::cout << "RESULT subsets=" << s.subsets << " failures=" << s.failures() << "\n";
    return s.failures() == 0 ? kYes : kNo;
  }
  if (a.files.size() != 1) throw std::invalid_argument("atom-check takes one vector set or --graph");
  const VectorSet s = load_vector_set(a.files[0]);
  const bool atom = is_atom(s);
  std::cout << "size = " << s.size() << "\nuniverse = " << s.universe() << "\natom = " << atom
            << "\nsums to zero = " << s.sums_to_zero() << "\n";
  if (!atom || !s.sums_to_zero()) {
    std::cout << "RESULT atom=" << atom << " zero_sum=" << s.sums_to_zero() << " bound=NA\n";
    return kNo;
  }
  const DegreeGap gap = degree_gap(s);
  const bool bound = check_large_part_bound(s);
  const MinimalSetForm form = classify_minimal_set(s);
  const ClaimChecks c = check_claims(s);
  std::cout << "delta = " << gap.delta << "\n|S_1| = " << gap.light.size()
            << "\n|S_delta| = " << gap.heavy.size() << "\nmax(|S_1|, |S_delta|) >= delta: " << bound
            << "\nminimal form: " << to_string(form) << "\nlarge set: "
            << (c.large_set_applies ? (c.large_set_holds ? "holds" : "FAILS") : "n/a") << "\nisolated heavy: "
            << (c.isolated_heavy_applies ? (c.isolated_heavy_holds ? "holds" : "FAILS") : "n/a") << "\nmid size: "
            << (c.mid_size_applies ? (c.mid_size_holds ? "holds" : "FAILS") : "n/a") << "\n";
  const bool ok = bound && form != MinimalSetForm::kViolation && c.large_set_holds && c.isolated_heavy_holds &&
                  c.mid_size_holds;
  std::cout << "RESULT atom=1 zero_sum=1 delta=" << gap.delta << " bound=" << bound
            << " form=" << to_string(form) << " ok=" << ok << "\n";
  return ok ? kYes : kNo;
}

int kl_check(const Args& a) {
  if (!a.pauli.empty()) {
    const CwsCode q = load_code(a);
    const PauliOperator e = parse_pauli(a.pauli);
    const kl::KlResult r = kl::kl_f(q, e);
    kl::write_kl_matrix(std::cout, q, e);
    const bool classicalized = detects(q, e);
    std::cout << "detected (Knill-Laflamme) = " << r.detected << "\ndetected (classicalized) = " << classicalized
              << "\n";
    std::cout << "RESULT detected=" << r.detected << " classicalized=" << classicalized;
    if (r.detected) std::cout << " f=" << r.f.value().real() << (r.f.value().imag() < 0 ? "-" : "+")
                              << std::abs(r.f.value().imag()) << "i";
    std::cout << "\n";
    return r.detected == classicalized ? kYes : kNo;
  }
  if (!a.seed) throw std::invalid_argument("kl-check without --pauli needs --seed");
  if (a.nmax < 1 || a.nmax > kl::kDefaultQubitCap) throw std::invalid_argument("--nmax out of range");
  std::mt19937_64 rng(*a.seed);
  std::uniform_int_distribution<std::size_t> len(1, a.nmax);
  std::size_t bad = 0, paulis = 0, f_checked = 0;
  for (std::size_t i = 0; i < a.count; ++i) {
    const CwsCode q = random_cws(rng, len(rng));
    const TriangleReport r = oracle_triangle(q);
    paulis += r.paulis_checked;
    f_checked += r.f_checked;
    if (!r.ok()) {
      ++bad;
      std::cout << "instance " << i << ": classicalized " << r.classicalized.to_string() << ", stabilizer "
                << r.stabilizer.to_string() << ", knill-laflamme " << r.knill_laflamme.to_string()
                << ", detection mismatches " << r.detection_mismatches << ", f failures " << r.f_failures
                << "\n";
    }
  }
  std::cout << "instances = " << a.count << "\npaulis compared = " << paulis
            << "\nf values checked = " << f_checked << "\ndisagreements = " << bad << "\n";
  std::cout << "RESULT instances=" << a.count << " disagreements=" << bad << "\n";
  return bad == 0 ? kYes : kNo;
}

int degeneracy(const Args& a) {
  const CwsCode q = load_code(a);
  const DegeneracyReport r = analyze_degeneracy(q, search_options(a));
  std::cout << "qdist = " << r.qdist << "\nGdist = " << r.gdist.to_string()
            << (r.certified_by_min_degree ? " (four-cycle free, min degree >= qdist)" : "")
            << "\ndegenerate = " << (r.degenerate ? "yes" : "no") << "\n";
  std::cout << "RESULT qdist=" << r.qdist << " gdist=" << r.gdist.to_string()
            << " certified=" << r.certified_by_min_degree << " degenerate=" << r.degenerate << "\n";
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum distance tools for classical, stabilizer and CWS codes"};
  app.require_subcommand(1);
  Args a;

  auto threads = [&](CLI::App* c) { c->add_option("--threads", a.threads, "Search partitions"); };
  auto weight = [&](CLI::App* c) { c->add_option("--max-weight", a.max_weight, "Weight cap"); };
  auto force = [&](CLI::App* c) {
    c->add_flag("--force", a.force, "Run searches above the candidate limit");
    c->add_option("--limit", a.limit, "Candidate limit")->capture_default_str();
  };
  auto files = [&](CLI::App* c, const char* what) { c->add_option("files", a.files, what); };
  auto output = [&](CLI::App* c) { c->add_option("-o,--output", a.output, "Output file"); };

  std::vector<std::pair<CLI::App*, int (*)(const Args&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Args&)) {
    CLI::App* c = app.add_subcommand(name, help);
    commands.emplace_back(c, fn);
    return c;
  };

  auto* c = add("classical-dist", "Minimum distance of ker H", classical_dist);
  files(c, "H");
  threads(c);

  c = add("quantum-dist", "Quantum distance of CWS(G, ker H)", quantum_dist);
  files(c, "INSTANCE | G H");
  weight(c);
  threads(c);
  force(c);

  c = add("gdist", "Graph-state distance", graph_dist);
  files(c, "G");
  weight(c);
  threads(c);
  force(c);

  c = add("stab-dist", "Distance of a stabilizer code", stab_dist);
  files(c, "S");
  weight(c);
  threads(c);
  force(c);

  c = add("to-stabilizer", "Stabilizer generators of CWS(G, ker H)", to_stab);
  files(c, "INSTANCE | G H");
  output(c);

  c = add("polarity", "Polarity graph of PG(2, p)", polarity);
  c->add_option("p", a.number, "Prime")->required();
  output(c);

  c = add("find-m", "Plane size p^2+p+1 in [n, 7n]", find_m_cmd);
  c->add_option("n", a.number, "Lower bound, > 7")->required();

  c = add("reduce", "Classical instance (H, t) to a CWS instance", reduce_cmd);
  files(c, "H");
  c->add_option("-t", a.t, "Distance threshold")->required();
  c->add_option("--mode", a.mode, "paper, scaled or custom")->capture_default_str();
  c->add_option("--custom-m", a.custom_m, "m = p^2+p+1 for custom mode");
  output(c);

  c = add("verify", "Exhaustive check of a reduction instance", verify_cmd);
  files(c, "INSTANCE");
  weight(c);
  c->add_flag("--decision", a.decision, "Exit 0 YES, 1 NO, 3 above cap");
  threads(c);
  force(c);

  c = add("decide", "Is there an undetected Pauli of weight <= t", decide_cmd);
  files(c, "INSTANCE");
  threads(c);
  force(c);

  c = add("gap", "Gap version of the decision", gap_cmd);
  files(c, "INSTANCE");
  c->add_option("--gamma", a.gamma, "Multiplicative gap, >= 1");
  c->add_option("--tau", a.tau, "Additive gap, > 0");
  weight(c);
  threads(c);
  force(c);

  c = add("check-lemma2", "gdist in {delta, delta+1} for 4-cycle-free graphs", check_degree_bound);
  c->add_option("--nmax", a.nmax, "Largest vertex count, <= 8")->capture_default_str();
  threads(c);

  c = add("atom-check", "ATOM-set bound and case checks", atom_check);
  files(c, "SET");
  c->add_option("--graph", a.graph, "Check every zero-sum column subset of (I | A_G)");

  c = add("kl-check", "Knill-Laflamme oracle", kl_check);
  files(c, "INSTANCE | G H");
  c->add_option("--pauli", a.pauli, "Single Pauli to test");
  c->add_option("--seed", a.seed, "Seed for the random sweep");
  c->add_option("--count", a.count, "Random instances")->capture_default_str();
  c->add_option("--nmax", a.nmax, "Largest random qubit count")->capture_default_str();

  c = add("degeneracy", "Compare Gdist with qdist", degeneracy);
  files(c, "INSTANCE | G H");
  threads(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(a);
    }
  } catch (const InfeasibleSearch& e) {
    std::cerr << "refused: " << e.what() << "\n";
    std::cout << "RESULT error=infeasible candidates=" << e.candidates() << "\n";
    return kAboveCap;
  } catch (const kl::QubitCapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    std::cout << "RESULT error=infeasible\n";
    return kAboveCap;
  } catch (const NoNonzeroCodeword& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << "RESULT error=input\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << "RESULT error=input\n";
    return kBadInput;
  }
  return kBadInput;
}
