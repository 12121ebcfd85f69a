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


#include "reports.hpp"

#include <ostream>
#include <random>

#include "troplab/bounds.hpp"
#include "troplab/certifier.hpp"
#include "troplab/constructions.hpp"
#include "troplab/decomposition.hpp"
#include "troplab/error.hpp"
#include "troplab/field.hpp"
#include "troplab/generators.hpp"
#include "troplab/greedy.hpp"
#include "troplab/io.hpp"
#include "troplab/random.hpp"

namespace troplab::cli {

std::string Format::operator()(const Rational& r) const {
  std::string s = r.to_string();
  if (decimal && !r.is_integer()) s += " (~" + r.to_decimal(*decimal) + ")";
  return s;
}

void Table::check(const std::string& name, bool ok, const std::string& value) {
  if (!ok) ++failures_;
  out_ << (ok ? "PASS  " : "FAIL  ") << name << ": " << value << '\n';
}

void Table::info(const std::string& name, const std::string& value) {
  out_ << "      " << name << ": " << value << '\n';
}

namespace {

std::string str(const Integer& v) { return v.get_str(); }
std::string str(std::size_t v) { return std::to_string(v); }

CertifyOptions options(const ReportParams& p) {
  CertifyOptions opt;
  if (p.produced_limit) opt.produced_limit = p.produced_limit;
  opt.exec = p.exec;
  return opt;
}

std::string factor_text(const FactorResult& f, const Format& fmt) {
  switch (f.kind) {
    case FactorResult::Kind::Finite: return fmt(f.value);
    case FactorResult::Kind::Infinite: return "infinite";
    case FactorResult::Kind::Invalid: return "invalid (" + f.note + ")";
  }
  return "?";
}

std::string ratio_text(const std::optional<Rational>& r, const Format& fmt) {
  return r ? fmt(*r) : "infinite";
}

}  // namespace

bool report_hierarchy(const ReportParams& p, Table& t) {
  const std::uint32_t m = p.m ? p.m : 5;
  const std::uint32_t d = p.d ? p.d : 2;
  const DesignSpec spec{m, d};
  const SetFamily f = polynomial_design(spec);
  const VectorSet a = f.characteristic_vectors();
  Integer size;
  mpz_ui_pow_ui(size.get_mpz_t(), m, d);
  t.check("|F| = m^d", Integer(f.size()) == size, str(f.size()));
  t.check("m-uniform", is_uniform(f, m), str(static_cast<std::size_t>(m)));
  t.check("d-disjoint", is_d_disjoint(f, d), str(static_cast<std::size_t>(d)));
  const Circuit c = design_approximator(spec);
  t.check("gates <= 3m^2", c.gate_count() <= 3 * m * m,
          str(c.gate_count()) + " <= " + str(static_cast<std::size_t>(3 * m * m)));
  const Rational r(m, d);
  const auto opt = options(p);
  t.check("certified at m/d", certify_max(c, a, r, opt).verdict, t.fmt()(r));
  const FactorResult ef = exact_factor(c, a, Sense::Max, opt);
  t.check("exact factor <= m/d",
          ef.kind == FactorResult::Kind::Finite && ef.value <= r, factor_text(ef, t.fmt()));
  if (ef.kind == FactorResult::Kind::Finite && ef.value > Rational(1)) {
    const Rational below = max(Rational(1), ef.value - Rational(1, 2));
    t.check("refuted below the exact factor", !certify_max(c, a, below, opt).verdict,
            t.fmt()(below));
  }
  const DesignBound bound = design_bound(m, d, Rational(1, 2));
  t.info("l = beta*d/2 (beta = 1/2)", t.fmt()(bound.l) + ", ceil " +
                                         std::to_string(bound.l_ceil) + ", floor " +
                                         std::to_string(bound.l_floor));
  const std::size_t deg = max_degree(f, bound.l_ceil);
  t.check("deg(F, ceil l) enumerated", Integer(deg) == bound.degree_ceil,
          str(deg) + " = " + str(bound.degree_ceil));
  t.info("design lower bound |F|/deg", str(bound.bound) + " (floor variant " +
                                           str(bound.bound_floor) + ")");
  t.info("factor (1-beta)m/d", t.fmt()(bound.factor));
  return t.all_passed();
}

bool report_sidon(const ReportParams& p, Table& t) {
  const std::uint32_t m = p.m ? p.m : 3;
  const VectorSet a = sidon_cubic(m);
  t.check("|A| = 2^m", a.size() == (std::size_t{1} << m), str(a.size()));
  bool uniform = true;
  for (const auto& v : a) uniform = uniform && is_zero_one(v) && weight(v) == 2 * m;
  t.check("every vector has 2m ones", uniform, str(static_cast<std::size_t>(2 * m)));
  t.check("Sidon", is_sidon(a), a.size() <= kMaxSidonSize ? "exhaustive" : "skipped");
  const auto field = FiniteField::get(2, m);
  t.check("x -> x^3 bijective on GF(2^m)", power_map_is_bijective(*field, 3),
          str(static_cast<std::size_t>(field->order())));
  const Circuit c = sidon_approximator(m);
  t.check("gates <= 4m", c.gate_count() <= 4 * m,
          str(c.gate_count()) + " <= " + str(static_cast<std::size_t>(4 * m)));
  const auto opt = options(p);
  t.check("certified at 2", certify_max(c, a, Rational(2), opt).verdict, "2");
  const FactorResult ef = exact_factor(c, a, Sense::Max, opt);
  t.check("exact factor <= 2", ef.kind == FactorResult::Kind::Finite && ef.value <= Rational(2),
          factor_text(ef, t.fmt()));
  return t.all_passed();
}

bool report_greedy(const ReportParams& p, Table& t) {
  const Format& fmt = t.fmt();
  const std::string family = p.family.empty() ? "star" : p.family;
  if (family == "star") {
    const std::uint32_t m = p.m ? p.m : 3;
    const Rational eps(1, 10);
    const SetFamily f = star_family(m);
    const Weighting x = star_weighting(m, eps);
    const Rational target = (Rational(1) - eps) * Rational(m);
    for (Sense s : {Sense::Max, Sense::Min}) {
      const GreedyRun run = greedy_run(f, x, s);
      const std::string tag = s == Sense::Max ? "max" : "min";
      t.info(tag + " value / optimum", fmt(run.value) + " / " + fmt(run.optimum));
      t.check(tag + " ratio >= (1-1/10)m", run.ratio && *run.ratio >= target,
              ratio_text(run.ratio, fmt) + " >= " + fmt(target));
    }
    const GreedyEstimate est = greedy_factor_estimate(f, p.trials, p.seed, Sense::Max, p.exec);
    t.check("estimate within [(1-1/10)m, m]",
            est.max_ratio && *est.max_ratio >= target && *est.max_ratio <= Rational(m),
            ratio_text(est.max_ratio, fmt) + " over " + str(est.runs) + " runs");
    return t.all_passed();
  }
  if (family == "path") {
    const Rational big(p.m ? p.m : 100);
    const SetFamily f(3, std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
    const Weighting x = {Rational(0), Rational(1), big};
    const GreedyRun bad_max = wrong_strategy_run(f, x, Sense::Max);
    const GreedyRun bad_min = wrong_strategy_run(f, x, Sense::Min);
    t.check("lightest-first worst-out max outputs 1", bad_max.value == Rational(1),
            fmt(bad_max.value) + " vs optimum " + fmt(bad_max.optimum));
    t.check("lightest-first best-in min outputs M", bad_min.value == big,
            fmt(bad_min.value) + " vs optimum " + fmt(bad_min.optimum));
    t.check("heaviest-first greedy exact", *greedy_run(f, x, Sense::Max).ratio == Rational(1) &&
                                               *greedy_run(f, x, Sense::Min).ratio == Rational(1),
            "max and min");
    return t.all_passed();
  }
  const SetFamily f = parse_family(read_file(family));
  const Rational m(static_cast<std::int64_t>(f.max_set_size()));
  for (Sense s : {Sense::Max, Sense::Min}) {
    const GreedyEstimate est = greedy_factor_estimate(f, p.trials, p.seed, s, p.exec);
    t.check(std::string(s == Sense::Max ? "max" : "min") + " ratio <= m",
            est.max_ratio && *est.max_ratio <= m,
            ratio_text(est.max_ratio, fmt) + " <= " + fmt(m));
  }
  if (f.uniform_size()) {
    const MatroidReport mr = matroid_check(f);
    if (mr.is_matroid) {
      const GreedyEstimate est = greedy_factor_estimate(f, p.trials, p.seed, Sense::Max, p.exec);
      t.check("matroid: ratio = 1", est.max_ratio && *est.max_ratio == Rational(1),
              ratio_text(est.max_ratio, fmt));
    } else {
      const auto w = non_matroid_witness(f, p.trials, p.seed);
      t.check("non-matroid: weighting with ratio > 1", w.has_value(),
              w ? ratio_text(greedy_run(f, *w, Sense::Max).ratio, fmt) : "none found");
    }
  }
  return t.all_passed();
}

bool report_decomposition(const ReportParams& p, Table& t) {
  // Chain x1 * x2 * x3 * x4 in the Minkowski view, mu = <b, .>, theta = 1/2.
  {
    CircuitBuilder b(Semiring::Minkowski, 4);
    const NodeId out = b.mul_all({b.var(0), b.var(1), b.var(2), b.var(3)});
    const Circuit chain = b.build(out);
    const ExponentVector target{1, 1, 1, 1};
    const NormMeasure mu = inner_product_norm({Rational(1), Rational(1), Rational(1), Rational(1)});
    const Decomposition d = decompose(chain, mu, target, Rational(1, 2));
    t.check("chain split norm in (1, 2]", d.norm_x > Rational(1) && d.norm_x <= Rational(2),
            "gate g" + std::to_string(d.gate) + ", x = " + to_string(d.x) +
                ", y = " + to_string(d.y));
  }

  std::mt19937_64 rng(p.seed);
  const std::size_t circuits = p.trials ? std::min<std::size_t>(p.trials, 100) : 100;
  std::size_t splits = 0;
  std::size_t skipped = 0;
  bool ok = true;
  std::string failure;
  for (std::size_t i = 0; i < circuits; ++i) {
    RandomCircuitSpec spec;
    spec.semiring = Semiring::Minkowski;
    spec.num_vars = 2 + rng() % 5;
    spec.gates = 1 + rng() % 15;
    const Circuit c = random_circuit(spec, rng);
    std::vector<VectorSet> produced;
    try {
      produced = produced_sets(c, p.produced_limit ? p.produced_limit : 20000);
    } catch (const ResourceError&) {
      ++skipped;
      continue;
    }
    const VectorSet& bset = produced[c.output()];
    for (int k = 0; k < 5; ++k) {
      std::vector<Rational> coeffs;
      for (std::size_t j = 0; j < c.num_vars(); ++j) {
        coeffs.emplace_back(static_cast<std::int64_t>(rng() % 5), 4);
      }
      const NormMeasure mu = inner_product_norm(coeffs);
      for (const auto& v : bset) {
        const Rational nb = mu(v);
        if (nb <= Rational(1)) continue;
        for (int s = 0; s < 5; ++s) {
          // theta uniform-ish in [1/mu(b), 1).
          const Rational lo = nb.reciprocal();
          const Rational theta = lo + (Rational(1) - lo) *
                                          Rational(static_cast<std::int64_t>(rng() % 16), 16);
          try {
            decompose(c, produced, mu, v, theta);
            ++splits;
          } catch (const Error& e) {
            ok = false;
            failure = e.what();
          }
        }
      }
    }
  }
  t.check("random Minkowski circuits: every split verified", ok,
          ok ? str(splits) + " splits, " + str(skipped) + " circuits over the size guard"
             : failure);

  const std::uint32_t n = p.n ? p.n : 6;
  const std::size_t m = n / 2;
  const SetFamily f = family_difference(all_subsets_of_size(n, m),
                                        graham_sloane(n, m, graham_sloane_best_residue(n, m)));
  t.check("complement family is (m-1)-dense", is_k_dense(f, m - 1, p.exec),
          "n = " + str(static_cast<std::size_t>(n)) + ", |F| = " + str(f.size()));
  const Circuit sel = selection_circuit(n, m - 1);
  const Rational r(static_cast<std::int64_t>(m), static_cast<std::int64_t>(m - 1));
  const AuditReport audit = audit_circuit_rectangles(sel, f, r, Rational(2, 3),
                                                     p.produced_limit ? p.produced_limit
                                                                      : kDefaultProducedLimit,
                                                     p.exec);
  t.check("rectangles lie below F", audit.all_below, str(audit.rectangles.size()) + " rectangles");
  t.check("rectangles cross-disjoint", audit.all_disjoint, "");
  t.check("large sets balanced somewhere", audit.uncovered.empty(),
          str(audit.large_sets - audit.uncovered.size()) + " of " + str(audit.large_sets));
  t.check("traversal lands on balanced rectangle", audit.traversal_hits == audit.large_sets,
          str(audit.traversal_hits));
  t.check("vector and set audits agree", audit.vector_set_agree, "");
  t.info("h_max / implied bound", str(audit.h_max) + " / " + (audit.implied_bound ? t.fmt()(*audit.implied_bound) : "none"));
  return t.all_passed();
}

bool report_counting(const ReportParams& p, Table& t) {
  const std::uint32_t n = p.n ? p.n : 20;
  const CountingBound cb = counting_bound(n);
  t.info("t = floor(2^n / n^3)", str(cb.t));
  t.info("floor(log2 L)", std::to_string(cb.log2_l_floor));
  t.info("log2 M = C(n, n/2) / n", t.fmt()(cb.log2_m));
  t.check("L < M", cb.l_below_m, "L^n < 2^C(n, n/2)");
  t.check("M - L >= L", cb.double_l_below_m, "(2L)^n <= 2^C(n, n/2)");
  const std::size_t ns = 8;
  const Rational frac = kdense_sampling_experiment(ns, 200, p.seed, p.exec);
  t.info("fraction of random F in C([8],4) that are 2-dense (200 trials)", t.fmt()(frac));
  return t.all_passed();
}

}  // namespace troplab::cli
