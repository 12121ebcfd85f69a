// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "troplab/bounds.hpp"
#include "troplab/certifier.hpp"
#include "troplab/constructions.hpp"
#include "troplab/decomposition.hpp"
#include "troplab/error.hpp"
#include "troplab/field.hpp"
#include "troplab/generators.hpp"
#include "troplab/greedy.hpp"
#include "troplab/lp.hpp"
#include "troplab/random.hpp"

namespace {

using namespace troplab;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failure messages; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok_ = false;
    if (failures_++ < 3) msg_ << (msg_.tellp() > 0 ? "; " : "") << what;
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? ", " : "") << s; }
  Outcome outcome() const {
    if (ok_) return {true, notes_.str()};
    return {false, msg_.str() + (failures_ > 3 ? " (+" + std::to_string(failures_ - 3) + " more)" : "")};
  }

 private:
  bool ok_ = true;
  std::size_t failures_ = 0;
  std::ostringstream msg_;
  std::ostringstream notes_;
};

std::string str(const Rational& r) { return r.to_string(); }
std::string str(std::size_t v) { return std::to_string(v); }

// LP decisions recorded for the solver cross-check.
struct Recorded {
  DominanceQuery query;
  Certificate certificate;
};
std::vector<Recorded> g_recorded;
std::mutex g_recorded_mutex;

// Runs `body` with LP decisions recorded when `record` is set.
Outcome recorded(bool record, const std::function<Outcome()>& body) {
  if (!record) return body();
  ScopedDominanceObserver obs([](const DominanceQuery& q, const Certificate& c) {
    std::lock_guard<std::mutex> lock(g_recorded_mutex);
    g_recorded.push_back({q, c});
  });
  return body();
}

Outcome selection() {
  Checker ck;
  oracle::Gen gen(1001);
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Circuit c = selection_circuit(n, k);
      ck.expect(c.gate_count() <= 2 * k * n, "Sel(" + str(n) + "," + str(k) + ") gates " + str(c.gate_count()));
      std::vector<Weighting> xs;
      for (int t = 0; t < 1000; ++t) xs.push_back(gen.weighting(n));
      const auto values = evaluate_many(c, xs);
      for (std::size_t t = 0; t < xs.size(); ++t) {
        ck.expect(values[t] == oracle::top_k_sum(xs[t], k), "Sel(" + str(n) + "," + str(k) + ") value");
        ++checks;
      }
    }
  }
  ck.note(str(checks) + " evaluations");
  return ck.outcome();
}

Outcome hierarchy() {
  Checker ck;
  for (auto [m, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}, {5, 3}}) {
    const std::string tag = "(" + str(m) + "," + str(d) + ")";
    const Circuit c = design_approximator({m, d});
    const VectorSet a = polynomial_design({m, d}).characteristic_vectors();
    const Rational r(m, d);
    ck.expect(c.gate_count() <= 3u * m * m, tag + " gates " + str(c.gate_count()));
    ck.expect(certify_max(c, a, r).verdict, tag + " not certified at m/d");
    const FactorResult f = exact_factor(c, a, Sense::Max);
    ck.expect(f.kind == FactorResult::Kind::Finite && f.value <= r, tag + " exact factor");
    if (f.kind == FactorResult::Kind::Finite) ck.note(tag + " " + str(f.value));
  }
  return ck.outcome();
}

Outcome refutation() {
  Checker ck;
  const Circuit c = design_approximator({5, 2});
  const VectorSet a = polynomial_design({5, 2}).characteristic_vectors();
  const CertificateBundle at2 = certify_max(c, a, Rational(2));
  ck.expect(!at2.verdict, "certified at 2");
  std::size_t refuted = 0;
  for (const auto& chk : at2.coverage) refuted += !chk.certificate.verdict;
  ck.expect(refuted > 0, "no failing coverage vector");
  ck.expect(certify_max(c, a, Rational(5, 2)).verdict, "not certified at 5/2");
  const DesignBound b = design_bound(5, 2, Rational(1, 2));
  ck.expect(b.bound == Integer(5), "design bound");
  ck.note(str(refuted) + " of " + str(at2.coverage.size()) + " coverage LPs infeasible at 2");
  return ck.outcome();
}

bool cube_map_bijective(std::uint32_t m) {
  const auto field = FiniteField::get(2, m);
  std::vector<bool> hit(field->order(), false);
  for (const auto& x : field->elements()) {
    const std::uint32_t i = x.pow(3).index();
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

Outcome sidon() {
  Checker ck;
  for (std::uint32_t m : {3u, 5u}) {
    const std::string tag = "m=" + str(m);
    const VectorSet a = sidon_cubic(m);
    ck.expect(a.size() == (std::size_t{1} << m), tag + " size");
    for (const auto& v : a) ck.expect(weight(v) == 2 * m, tag + " weight");
    ck.expect(is_sidon(a), tag + " not Sidon");
    if (m == 3) ck.expect(oracle::brute_sidon(a), tag + " brute Sidon");
    const Circuit c = sidon_approximator(m);
    ck.expect(c.gate_count() <= 4 * m, tag + " gates");
    const FactorResult f = exact_factor(c, a, Sense::Max);
    ck.expect(f.kind == FactorResult::Kind::Finite && f.value <= Rational(2), tag + " factor");
    if (f.kind == FactorResult::Kind::Finite) ck.note(tag + " factor " + str(f.value));
  }
  for (std::uint32_t m = 1; m <= 9; ++m) {
    ck.expect(cube_map_bijective(m) == (m % 2 == 1), "cube map m=" + str(m));
  }
  return ck.outcome();
}

Outcome designs() {
  Checker ck;
  std::size_t specs = 0;
  for (std::uint32_t m : {2u, 3u, 4u, 5u}) {
    for (std::uint32_t d = 1; d <= m; ++d) {
      const std::string tag = "(" + str(m) + "," + str(d) + ")";
      const SetFamily f = polynomial_design({m, d});
      std::size_t size = 1;
      for (std::uint32_t i = 0; i < d; ++i) size *= m;
      ck.expect(f.size() == size, tag + " size");
      ck.expect(is_uniform(f, m), tag + " uniform");
      ck.expect(is_d_disjoint(f, d), tag + " disjoint");
      for (std::uint32_t l = 0; l <= d; ++l) {
        std::size_t expected = 1;
        for (std::uint32_t i = l; i < d; ++i) expected *= m;
        ck.expect(max_degree(f, l) == expected, tag + " deg l=" + str(l));
        if (m <= 3) ck.expect(oracle::brute_degree(f, l) == expected, tag + " brute deg l=" + str(l));
      }
      ++specs;
    }
  }
  ck.note(str(specs) + " designs");
  return ck.outcome();
}

Outcome boolean_bound() {
  Checker ck;
  std::size_t certified = 0;
  for (const auto& mc : corpus::minplus_cases()) {
    if (mc.a.arity() > 12) continue;
    const FactorResult f = exact_factor(mc.circuit, mc.a, Sense::Min);
    if (f.kind != FactorResult::Kind::Finite) continue;
    ++certified;
    ck.expect(certify_min(mc.circuit, mc.a, f.value).verdict, mc.name + " not certified at its factor");
    ck.expect(boolean_bound_check(mc.circuit, mc.a), mc.name + " boolean function differs");
    // Negative control: drop every produced vector above the first minimal support.
    const VectorSet b = produced_set(strip_constants(mc.circuit));
    const ExponentVector s = corpus::minimal_supports(b)[0];
    std::vector<ExponentVector> kept;
    for (const auto& v : b) {
      if (!leq(s, v)) kept.push_back(v);
    }
    ck.expect(!boolean_bound_check(VectorSet(b.arity(), kept), mc.a), mc.name + " corrupted set accepted");
  }
  ck.expect(certified >= 20, "only " + str(certified) + " certified cases");
  ck.note(str(certified) + " certified circuits");
  return ck.outcome();
}

Outcome constant_elimination() {
  Checker ck;
  std::mt19937_64 rng(20261017);
  oracle::Gen gen(20261018);
  std::size_t done = 0;
  std::size_t drawn = 0;
  while (done < 200 && drawn < 20000) {
    ++drawn;
    RandomCircuitSpec spec;
    const bool minimize = drawn % 2 == 0;
    spec.semiring = minimize ? Semiring::MinPlus : Semiring::MaxPlus;
    spec.num_vars = 1 + rng() % 6;
    spec.gates = 1 + rng() % 12;
    spec.constant_percent = 30;
    spec.mul_percent = 40;
    Circuit c = random_circuit(spec, rng);
    if (!minimize) {
      // Max-plus approximators need zero offsets, so constants are read as 0.
      std::vector<Node> nodes = c.nodes();
      for (auto& node : nodes) {
        if (node.kind == NodeKind::Const) node.value = Rational(0);
      }
      c = Circuit(c.semiring(), c.num_vars(), nodes, c.output());
    }
    if (c.is_constant_free()) continue;
    std::optional<Circuit> stripped_circuit;
    try {
      stripped_circuit = strip_constants(c);
    } catch (const DegenerateCircuitError&) {
      continue;  // produces the zero vector, never certified
    }
    VectorSet b;
    try {
      b = produced_set(c, 5000);
    } catch (const ResourceError&) {
      continue;
    }
    std::vector<ExponentVector> a =
        (minimize ? minimal_elements(b) : maximal_elements(b)).vectors();
    for (std::size_t i = 0, extra = gen.below(3); i < extra; ++i) {
      a.push_back(gen.vector(spec.num_vars, 2));
    }
    const ExponentVector zero(spec.num_vars, 0);
    a.erase(std::remove(a.begin(), a.end(), zero), a.end());
    if (a.empty()) continue;
    const VectorSet av(spec.num_vars, a);
    const Sense sense = minimize ? Sense::Min : Sense::Max;
    const FactorResult f = exact_factor(c, av, sense);
    if (f.kind != FactorResult::Kind::Finite) continue;
    const Rational r = f.value;
    const bool original = minimize ? certify_min(c, av, r).verdict : certify_max(c, av, r).verdict;
    ck.expect(original, "circuit " + str(drawn) + " not certified at its exact factor");
    const Circuit& s = *stripped_circuit;
    ck.expect(s.is_constant_free(), "constants survive");
    ck.expect(s.gate_count() <= c.gate_count(), "strip grew the circuit");
    const bool stripped = minimize ? certify_min(s, av, r).verdict : certify_max(s, av, r).verdict;
    ck.expect(stripped, "circuit " + str(drawn) + " stripped version fails at " + str(r));
    ++done;
  }
  ck.expect(done == 200, "only " + str(done) + " certified circuits drawn");
  ck.note(str(done) + " circuits from " + str(drawn) + " draws");
  return ck.outcome();
}

Outcome decomposition() {
  Checker ck;
  std::mt19937_64 rng(8008);
  oracle::Gen gen(8009);
  std::size_t splits = 0;
  for (int i = 0; i < 100; ++i) {
    RandomCircuitSpec spec;
    spec.semiring = Semiring::Minkowski;
    spec.num_vars = 1 + rng() % 6;
    spec.gates = 1 + rng() % 15;
    spec.mul_percent = 50;
    const Circuit c = random_circuit(spec, rng);
    std::vector<VectorSet> produced;
    for (std::size_t v = 0; v < c.nodes().size(); ++v) {
      produced.push_back(
          produced_set(Circuit(c.semiring(), c.num_vars(), c.nodes(), static_cast<NodeId>(v))));
    }
    for (int j = 0; j < 5; ++j) {
      std::vector<Rational> a;
      for (std::size_t e = 0; e < spec.num_vars; ++e) a.emplace_back(gen.below(5), 4);
      const NormMeasure mu = inner_product_norm(a);
      for (const auto& b : produced[c.output()]) {
        const Rational nb = mu(b);
        if (nb <= Rational(1)) continue;
        const Rational lo = Rational(1) / nb;
        for (int t = 0; t < 5; ++t) {
          const Rational theta = lo + (Rational(1) - lo) * Rational(gen.below(16), 16);
          try {
            const Decomposition d = decompose(c, produced, mu, b, theta);
            ck.expect(produced[d.gate].contains(d.x) && add(d.x, d.y) == b, "split does not recombine");
            ck.expect(theta / 2 * nb < d.norm_x && d.norm_x <= theta * nb, "window violated");
          } catch (const InvariantError& e) {
            ck.expect(false, e.what());
          }
          ++splits;
        }
      }
    }
  }
  ck.note(str(splits) + " splits");
  return ck.outcome();
}

Outcome audit() {
  Checker ck;
  for (std::size_t n : {6u, 8u}) {
    const std::size_t m = n / 2;
    const SetFamily h = graham_sloane(n, m, graham_sloane_best_residue(n, m));
    const SetFamily f = family_difference(all_subsets_of_size(n, m), h);
    const std::string tag = "n=" + str(n);
    ck.expect(matroid_check(f).is_matroid, tag + " complement is not a matroid");
    ck.expect(is_k_dense(f, m - 1) && oracle::brute_dense(f, m - 1), tag + " not (m-1)-dense");
    const Rational r(static_cast<std::int64_t>(m), static_cast<std::int64_t>(m - 1));
    const AuditReport rep = audit_circuit_rectangles(selection_circuit(n, m - 1), f, r, Rational(2, 3));
    ck.expect(rep.all_below, tag + " rectangle not below F");
    ck.expect(rep.all_disjoint, tag + " rectangle not cross-disjoint");
    ck.expect(rep.coverage(), tag + " " + str(rep.uncovered.size()) + " large sets unbalanced");
    ck.expect(rep.vector_set_agree, tag + " vector/set balance disagree");
    ck.note(tag + " " + str(rep.large_sets - rep.uncovered.size()) + "/" + str(rep.large_sets) +
            " covered, h_max " + str(rep.h_max));
  }
  return ck.outcome();
}

Outcome greedy() {
  Checker ck;
  std::size_t families = 0;
  for (const auto& nf : corpus::families()) {
    const GreedyEstimate est = greedy_factor_estimate(nf.family, 10000, 42);
    const Rational m(static_cast<std::int64_t>(nf.family.max_set_size()));
    ck.expect(est.max_ratio && *est.max_ratio <= m, "(a) " + nf.name + " ratio above m");
    ++families;
  }
  const Rational eps(1, 10);
  for (std::size_t m = 2; m <= 6; ++m) {
    const GreedyRun run = greedy_run(star_family(m), star_weighting(m, eps), Sense::Max);
    ck.expect(run.ratio && *run.ratio >= (Rational(1) - eps) * Rational(static_cast<std::int64_t>(m)),
              "(a) star m=" + str(m));
  }
  for (const auto& nf : corpus::graham_matroids()) {
    const GreedyEstimate est = greedy_factor_estimate(nf.family, 10000, 43);
    ck.expect(est.max_ratio == std::optional<Rational>(1), "(b) " + nf.name + " ratio above 1");
  }
  std::size_t controls = 0;
  for (const auto& nf : corpus::non_matroids()) {
    if (!nf.family.uniform_size()) continue;
    const auto w = non_matroid_witness(nf.family, 10000, 44);
    ck.expect(w && *greedy_run(nf.family, *w, Sense::Max).ratio > Rational(1), "(b) " + nf.name + " no witness");
    ++controls;
  }
  for (std::uint32_t m = 1; m <= 4; ++m) {
    std::size_t fact = 1;
    for (std::uint32_t i = 2; i <= m; ++i) fact *= i;
    for (std::uint32_t k = 2; k <= 3; ++k) {
      const SetFamily f = hypergraph_matchings({m, k});
      std::size_t expected = 1;
      for (std::uint32_t i = 1; i < k; ++i) expected *= fact;
      ck.expect(f.size() == expected, "(c) F(" + str(m) + "," + str(k) + ") size");
      const GreedyEstimate est = greedy_factor_estimate(f, 1000, 45);
      ck.expect(est.max_ratio && *est.max_ratio <= Rational(k), "(c) F(" + str(m) + "," + str(k) + ") ratio");
    }
  }
  ck.note(str(families) + " families, " + str(controls) + " non-matroid controls");
  return ck.outcome();
}

Rational degree_of(const Circuit& c) {
  const DegreeResult d = semantic_degree(c, corpus::minimal_supports(produced_set(c)));
  if (!d.finite) throw InvariantError("semantic degree is infinite");
  return d.value;
}

Outcome semantic() {
  Checker ck;
  for (std::size_t n : {4u, 5u}) {
    const DegreeResult d = semantic_degree(bellman_ford_circuit(n, 0, n - 1, Semiring::Boolean),
                                           oracle::simple_paths(n, 0, n - 1));
    ck.expect(d.finite && d.value == Rational(1), "BF n=" + str(n) + " degree " + str(d.value));
  }
  for (std::size_t n : {3u, 4u}) {
    const DegreeResult d = semantic_degree(spanning_tree_boolean(n), oracle::spanning_trees(n));
    ck.expect(d.finite && d.value <= Rational(static_cast<std::int64_t>(n - 1)), "ST n=" + str(n));
    ck.note("ST n=" + str(n) + " degree " + str(d.value));
  }
  std::mt19937_64 rng(1111);
  auto random_boolean = [&](std::size_t n) {
    RandomCircuitSpec spec;
    spec.semiring = Semiring::Boolean;
    spec.num_vars = n;
    spec.gates = 1 + rng() % 7;
    spec.mul_percent = 40;
    return random_circuit(spec, rng);
  };
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 4;
    const Circuit c1 = random_boolean(n);
    const Circuit c2 = random_boolean(n);
    const std::string tag = "pair " + str(static_cast<std::size_t>(i));
    for (const Circuit* c : {&c1, &c2}) {
      const VectorSet b = produced_set(*c);
      const VectorSet a = corpus::minimal_supports(b);
      const DegreeResult d = semantic_degree(*c, a);
      // degree 1 iff A is inside B
      ck.expect((d.value == Rational(1)) == a.is_subset_of(b), tag + " degree one iff A inside B");
      // r-bounded copies for all a give degree <= r
      for (std::int64_t r = 1; r <= 4; ++r) {
        if (bounded_copy_checks(a, b, Rational(r)).sufficient) {
          ck.expect(d.value <= Rational(r), tag + " bounded copies above degree");
        }
      }
      // at r = degree every a has an s-bounded copy, s <= r|a| - |a| + r
      ck.expect(bounded_copy_checks(a, b, d.value).necessary, tag + " copy size at degree");
      ck.expect(d.value <= Rational(syntactic_degree(*c)), tag + " above syntactic degree");
    }
    const Rational d1 = degree_of(c1);
    const Rational d2 = degree_of(c2);
    ck.expect(degree_of(corpus::join(c1, c2, NodeKind::Add)) <= std::max(d1, d2), tag + " OR composition");
    ck.expect(degree_of(corpus::join(c1, c2, NodeKind::Mul)) <= d1 + d2, tag + " AND composition");
  }
  return ck.outcome();
}

Outcome cross_validation() {
  Checker ck;
  std::size_t compared = 0;
  for (const auto& rec : g_recorded) {
    if (rec.certificate.verdict) {
      ck.expect(verify_witness(rec.query, rec.certificate), "witness does not re-verify");
    }
    if (rec.query.generators.size() > 12) continue;
    ck.expect(oracle::fm_dominance(rec.query) == rec.certificate.verdict, "Fourier-Motzkin disagrees");
    ++compared;
  }
  ck.expect(compared > 1000, "only " + str(compared) + " decisions compared");
  ck.note(str(compared) + " of " + str(g_recorded.size()) + " decisions compared, all witnesses re-verified");
  return ck.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  bool record;  // feeds the solver cross-check
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "selection circuits", 5, false, selection},
      {2, "hierarchy upper bound", 120, true, hierarchy},
      {3, "factor refutation", 60, true, refutation},
      {4, "Sidon suite", 60, true, sidon},
      {5, "design combinatorics", 60, false, designs},
      {6, "boolean bound consistency", 30, true, boolean_bound},
      {7, "constant elimination", 120, true, constant_elimination},
      {8, "windowed decomposition", 120, false, decomposition},
      {9, "rectangle audit", 120, false, audit},
      {10, "greedy", 180, false, greedy},
      {11, "semantic degree", 180, true, semantic},
      {12, "solver cross-validation", 1e9, false, cross_validation},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = recorded(c.record, c.run);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      out.ok = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    all = all && out.ok;
    std::printf("%s  %2d %-26s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}
