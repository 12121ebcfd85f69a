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


#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "reports.hpp"
#include "troplab/bounds.hpp"
#include "troplab/certifier.hpp"
#include "troplab/constructions.hpp"
#include "troplab/decomposition.hpp"
#include "troplab/error.hpp"
#include "troplab/generators.hpp"
#include "troplab/greedy.hpp"
#include "troplab/io.hpp"

namespace troplab::cli {
namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::optional<int> decimal;
  std::size_t max_produced = kDefaultProducedLimit;
  std::size_t max_family = 100000;
  std::size_t max_generators = 20000;
  bool serial = false;

  Execution exec() const { return serial ? Execution::Serial : Execution::Parallel; }
  Format fmt() const { return Format{decimal}; }
  CertifyOptions certify() const {
    CertifyOptions o;
    o.produced_limit = max_produced;
    o.exec = exec();
    return o;
  }
};

Circuit load_circuit(const std::string& path) {
  Circuit c = parse_circuit(read_file(path));
  require_valid(c);
  return c;
}

void guard_family(const SetFamily& f, const Globals& g) {
  if (f.size() > g.max_family) {
    throw ResourceError("family has " + std::to_string(f.size()) + " sets, above --max-family " +
                        std::to_string(g.max_family));
  }
}

SetFamily load_family(const std::string& path, const Globals& g) {
  SetFamily f = parse_family(read_file(path));
  guard_family(f, g);
  return f;
}

// A family or a vector-set file, by header.
VectorSet load_vectors(const std::string& path, const Globals& g) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string first;
  while (in >> first && first[0] == '#') std::getline(in, first);
  VectorSet v = first == "family" ? parse_family(text).characteristic_vectors()
                                  : parse_vectors(text);
  if (v.size() > g.max_generators) {
    throw ResourceError("vector set has " + std::to_string(v.size()) +
                        " vectors, above --max-generators " + std::to_string(g.max_generators));
  }
  return v;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

Sense parse_sense(const std::string& s) {
  if (s == "max") return Sense::Max;
  if (s == "min") return Sense::Min;
  throw PreconditionError("sense must be max or min");
}

void print_certificate(const Certificate& c, const Format& fmt) {
  std::cout << " verdict=" << (c.verdict ? "true" : "false") << " lambda=[";
  for (std::size_t i = 0; i < c.lambda.size(); ++i) {
    std::cout << (i ? " " : "") << c.lambda[i].first << ':' << fmt(c.lambda[i].second);
  }
  std::cout << ']';
  if (!c.note.empty()) std::cout << " note=\"" << c.note << '"';
  std::cout << '\n';
}

void print_bundle(const CertificateBundle& b, const Format& fmt) {
  std::cout << "sense: " << (b.sense == Sense::Max ? "max" : "min") << '\n'
            << "factor: " << fmt(b.factor) << '\n'
            << "|A|: " << b.a.size() << '\n'
            << "|B|: " << b.b.size() << '\n';
  if (b.sense == Sense::Min) {
    std::cout << "|B0|: " << b.b_zero.size() << '\n'
              << "antichain-mode: " << (b.antichain_mode ? "true" : "false") << '\n';
  }
  for (const auto* group : {&b.validity, &b.coverage}) {
    for (const auto& check : *group) {
      std::cout << (check.kind == CheckKind::Validity ? "validity b=" : "coverage a=")
                << to_string(check.subject) << (check.tight ? " tight" : "");
      print_certificate(check.certificate, fmt);
    }
  }
  if (!b.note.empty()) std::cout << "note: " << b.note << '\n';
  std::cout << "verdict: " << (b.verdict ? "true" : "false") << '\n';
}

void print_factor(const FactorResult& f, const Format& fmt) {
  switch (f.kind) {
    case FactorResult::Kind::Finite: std::cout << "factor: " << fmt(f.value) << '\n'; break;
    case FactorResult::Kind::Infinite: std::cout << "factor: infinite\n"; break;
    case FactorResult::Kind::Invalid: std::cout << "factor: invalid\n"; break;
  }
  if (f.witness) std::cout << "witness: " << to_string(*f.witness) << '\n';
  if (!f.note.empty()) std::cout << "note: " << f.note << '\n';
}

void print_run(const GreedyRun& run, const Format& fmt) {
  std::cout << "solution:";
  for (auto e : elements_of(run.solution)) std::cout << ' ' << e + 1;
  std::cout << "\nvalue: " << fmt(run.value) << "\noptimum: " << fmt(run.optimum)
            << "\nratio: " << (run.ratio ? fmt(*run.ratio) : "infinite") << "\ntrace:";
  for (const auto& s : run.trace) std::cout << ' ' << s.element + 1 << (s.accepted ? "+" : "-");
  std::cout << '\n';
}

std::string yes(bool b) { return b ? "true" : "false"; }

int run(int argc, char** argv) {
  CLI::App app{"Tropical circuit laboratory"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for all randomness");
  app.add_option("--decimal", g.decimal, "Append non-authoritative decimal renderings");
  app.add_option("--max-produced", g.max_produced, "Produced-set size guard");
  app.add_option("--max-family", g.max_family, "Family size guard");
  app.add_option("--max-generators", g.max_generators, "LP generator count guard");
  app.add_flag("--serial", g.serial, "Run kernels serially");

  std::string circuit_path, second_path, third_path, out_path, kind, tag, factor_text, sense_text;
  std::uint32_t n = 0, k = 0, m = 0, d = 0, s = 0, t = 0;
  std::size_t trials = 10000;
  std::optional<std::uint32_t> lopt, kopt, mopt, dopt;

  // circuit-ir
  auto* validate_cmd = app.add_subcommand("validate", "Check a circuit file");
  validate_cmd->add_option("circuit", circuit_path)->required();
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a circuit on a weighting");
  eval_cmd->add_option("circuit", circuit_path)->required();
  eval_cmd->add_option("weights", second_path)->required();
  auto* produced_cmd = app.add_subcommand("produced", "Print the produced set");
  produced_cmd->add_option("circuit", circuit_path)->required();
  produced_cmd->add_option("-o,--output", out_path);
  auto* convert_cmd = app.add_subcommand("convert", "Change the semiring tag");
  convert_cmd->add_option("circuit", circuit_path)->required();
  convert_cmd->add_option("--to", tag)->required();
  convert_cmd->add_option("-o,--output", out_path);
  auto* strip_cmd = app.add_subcommand("strip", "Eliminate constants");
  strip_cmd->add_option("circuit", circuit_path)->required();
  strip_cmd->add_option("-o,--output", out_path);
  auto* degree_cmd = app.add_subcommand("degree", "Syntactic degree");
  degree_cmd->add_option("circuit", circuit_path)->required();

  // constructions
  auto* build_cmd = app.add_subcommand("build", "Build a circuit");
  build_cmd->add_option("kind", kind, "sel|design-approx|sidon-approx|bf|fw|st-conn")->required();
  build_cmd->add_option("--n", n);
  build_cmd->add_option("--k", k);
  build_cmd->add_option("--m", m);
  build_cmd->add_option("--d", d);
  build_cmd->add_option("--s", s, "Source vertex (1-based)");
  build_cmd->add_option("--t", t, "Target vertex (1-based)");
  build_cmd->add_option("--tag", tag, "boolean|minplus (bf)");
  build_cmd->add_option("-o,--output", out_path);

  // generators and problems
  auto* gen_cmd = app.add_subcommand("gen", "Generate a family or vector set");
  gen_cmd->add_option("kind", kind, "design|graham|matchings|sidon")->required();
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--m", m);
  gen_cmd->add_option("--d", d);
  gen_cmd->add_option("--k", k);
  gen_cmd->add_option("--l", lopt);
  bool complement = false;
  gen_cmd->add_flag("--complement-of-graham", complement, "Emit C([n],m) minus H_l");
  gen_cmd->add_option("-o,--output", out_path);
  auto* pred_cmd = app.add_subcommand("predicates", "Structural predicates of a family");
  pred_cmd->add_option("family", second_path)->required();
  pred_cmd->add_option("--m", mopt);
  pred_cmd->add_option("--k", kopt);
  pred_cmd->add_option("--d", dopt);
  auto* optimum_cmd = app.add_subcommand("optimum", "Optimum of a family on a weighting");
  optimum_cmd->add_option("family", second_path)->required();
  optimum_cmd->add_option("weights", third_path)->required();
  optimum_cmd->add_option("--sense", sense_text)->required();
  auto* similar_cmd = app.add_subcommand("similar", "Similarity of two vector sets");
  similar_cmd->add_option("a", second_path)->required();
  similar_cmd->add_option("b", third_path)->required();
  auto* sample_cmd = app.add_subcommand("kdense-sample", "Random denseness experiment");
  sample_cmd->add_option("--n", n)->required();
  sample_cmd->add_option("--trials", trials);

  // certifier
  auto* cmax_cmd = app.add_subcommand("certify-max", "Certify a maxplus approximator");
  auto* cmin_cmd = app.add_subcommand("certify-min", "Certify a minplus approximator");
  for (auto* cmd : {cmax_cmd, cmin_cmd}) {
    cmd->add_option("circuit", circuit_path)->required();
    cmd->add_option("feasible", second_path, "Family or vector-set file")->required();
    cmd->add_option("--factor", factor_text)->required();
  }
  auto* factor_cmd = app.add_subcommand("exact-factor", "Smallest certified factor");
  factor_cmd->add_option("circuit", circuit_path)->required();
  factor_cmd->add_option("feasible", second_path)->required();
  factor_cmd->add_option("--sense", sense_text);
  auto* sdeg_cmd = app.add_subcommand("semantic-degree", "Semantic degree of a boolean circuit");
  sdeg_cmd->add_option("circuit", circuit_path)->required();
  sdeg_cmd->add_option("minterms", second_path)->required();
  auto* bool_cmd = app.add_subcommand("bool-bound", "Boolean lower-bound consistency");
  bool_cmd->add_option("circuit", circuit_path)->required();
  bool_cmd->add_option("feasible", second_path)->required();
  auto* arith_cmd = app.add_subcommand("arith-witness", "Arithmetic sufficient condition");
  arith_cmd->add_option("circuit", circuit_path)->required();
  arith_cmd->add_option("family", second_path)->required();
  arith_cmd->add_option("--factor", factor_text)->required();

  // decomposition
  std::string norm_text, theta_text, target_text, beta_text;
  auto* decomp_cmd = app.add_subcommand("decompose", "Decomposition traversal");
  decomp_cmd->add_option("circuit", circuit_path)->required();
  decomp_cmd->add_option("--norm", norm_text)->required();
  decomp_cmd->add_option("--theta", theta_text)->required();
  decomp_cmd->add_option("--target", target_text)->required();
  auto* audit_cmd = app.add_subcommand("audit", "Rectangle audit of a certified circuit");
  audit_cmd->add_option("circuit", circuit_path)->required();
  audit_cmd->add_option("family", second_path)->required();
  audit_cmd->add_option("--factor", factor_text)->required();
  audit_cmd->add_option("--beta", beta_text)->required();
  auto* bound_cmd = app.add_subcommand("bound", "Closed-form bound calculators");
  std::string r_text = "1";
  bound_cmd->add_option("kind", kind, "design|matching|counting")->required();
  bound_cmd->add_option("--m", m);
  bound_cmd->add_option("--d", d);
  bound_cmd->add_option("--k", k);
  bound_cmd->add_option("--n", n);
  bound_cmd->add_option("--r", r_text);
  bound_cmd->add_option("--beta", beta_text);

  // greedy
  auto* greedy_cmd = app.add_subcommand("greedy", "Heaviest-first greedy");
  greedy_cmd->add_option("sense", sense_text)->required();
  greedy_cmd->add_option("family", second_path)->required();
  greedy_cmd->add_option("weights", third_path)->required();
  auto* gfactor_cmd = app.add_subcommand("greedy-factor", "Empirical greedy factor");
  gfactor_cmd->add_option("family", second_path)->required();
  gfactor_cmd->add_option("--trials", trials);
  gfactor_cmd->add_option("--sense", sense_text);
  gfactor_cmd->add_option("--seed", g.seed);
  auto* gbad_cmd = app.add_subcommand("greedy-bad", "Lightest-first wrong-strategy baseline");
  gbad_cmd->add_option("family", second_path)->required();
  gbad_cmd->add_option("weights", third_path)->required();
  gbad_cmd->add_option("--sense", sense_text);

  // reports
  ReportParams rp;
  auto* report_cmd = app.add_subcommand("report", "Consolidated pass/fail suites");
  report_cmd->add_option("suite", kind, "hierarchy|sidon|greedy|decomposition|counting")
      ->required();
  report_cmd->add_option("--m", rp.m);
  report_cmd->add_option("--d", rp.d);
  report_cmd->add_option("--n", rp.n);
  report_cmd->add_option("--family", rp.family, "star|path|<family file>");
  report_cmd->add_option("--trials", rp.trials);
  report_cmd->add_option("--seed", g.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  const Format fmt = g.fmt();

  if (validate_cmd->parsed()) {
    const Circuit c = parse_circuit(read_file(circuit_path));
    const auto issues = validate(c);
    for (const auto& i : issues) std::cout << "violation: " << i << '\n';
    std::cout << "valid: " << yes(issues.empty()) << "\ngates: " << c.gate_count() << '\n';
    return 0;
  }
  if (eval_cmd->parsed()) {
    const Circuit c = load_circuit(circuit_path);
    std::cout << fmt(evaluate(c, parse_weighting(read_file(second_path)))) << '\n';
    return 0;
  }
  if (produced_cmd->parsed()) {
    emit(out_path, serialize(produced_set(load_circuit(circuit_path), g.max_produced)));
    return 0;
  }
  if (convert_cmd->parsed()) {
    const auto target = parse_semiring(tag);
    if (!target) throw PreconditionError("convert: unknown semiring " + tag);
    emit(out_path, serialize(convert(load_circuit(circuit_path), *target)));
    return 0;
  }
  if (strip_cmd->parsed()) {
    emit(out_path, serialize(strip_constants(load_circuit(circuit_path))));
    return 0;
  }
  if (degree_cmd->parsed()) {
    std::cout << syntactic_degree(load_circuit(circuit_path)).get_str() << '\n';
    return 0;
  }
  if (build_cmd->parsed()) {
    auto vertex = [&](std::uint32_t v, std::uint32_t fallback) -> std::size_t {
      const std::uint32_t x = v ? v : fallback;
      if (x < 1) throw PreconditionError("build: vertices are 1-based");
      return x - 1;
    };
    std::optional<Circuit> c;
    if (kind == "sel") {
      c = selection_circuit(n, k);
    } else if (kind == "design-approx") {
      c = design_approximator(DesignSpec{m, d});
    } else if (kind == "sidon-approx") {
      c = sidon_approximator(m);
    } else if (kind == "bf") {
      const auto sr = parse_semiring(tag.empty() ? "minplus" : tag);
      if (!sr) throw PreconditionError("build bf: unknown tag " + tag);
      c = bellman_ford_circuit(n, vertex(s, 1), vertex(t, n), *sr);
    } else if (kind == "fw") {
      c = floyd_warshall_circuit(n, vertex(s, 1), vertex(t, n));
    } else if (kind == "st-conn") {
      c = spanning_tree_boolean(n);
    } else {
      throw PreconditionError("build: unknown kind " + kind);
    }
    emit(out_path, serialize(*c));
    return 0;
  }
  if (gen_cmd->parsed()) {
    if (kind == "design") {
      emit(out_path, serialize(polynomial_design(DesignSpec{m, d})));
    } else if (kind == "graham") {
      const std::size_t res = lopt ? *lopt : graham_sloane_best_residue(n, m);
      SetFamily f = graham_sloane(n, m, res);
      if (complement) f = family_difference(all_subsets_of_size(n, m), f);
      emit(out_path, serialize(f));
    } else if (kind == "matchings") {
      emit(out_path, serialize(hypergraph_matchings(HypergraphSpec{m, k})));
    } else if (kind == "sidon") {
      emit(out_path, serialize(sidon_cubic(m)));
    } else {
      throw PreconditionError("gen: unknown kind " + kind);
    }
    return 0;
  }
  if (pred_cmd->parsed()) {
    const SetFamily f = load_family(second_path, g);
    PredicateParams pp;
    pp.m = mopt;
    pp.k = kopt;
    pp.d = dopt;
    const FamilyPredicates fp = predicates(f, pp);
    std::cout << "sets: " << f.size() << "\nantichain: " << yes(fp.is_antichain) << '\n';
    std::cout << "uniform-size: "
              << (fp.uniform_size ? std::to_string(*fp.uniform_size) : "none") << '\n';
    if (fp.is_uniform) std::cout << "uniform(" << *mopt << "): " << yes(*fp.is_uniform) << '\n';
    if (fp.is_k_dense) std::cout << "dense(" << *kopt << "): " << yes(*fp.is_k_dense) << '\n';
    if (fp.is_d_disjoint) {
      std::cout << "disjoint(" << *dopt << "): " << yes(*fp.is_d_disjoint) << '\n';
    }
    std::cout << "separated: " << yes(fp.is_separated) << "\nsidon: " << yes(fp.is_sidon)
              << '\n';
    if (fp.matroid) {
      std::cout << "matroid: " << yes(fp.matroid->is_matroid) << '\n';
      if (const auto& w = fp.matroid->witness) {
        std::cout << "exchange-violation: A=#" << w->a_set + 1 << " B=#" << w->b_set + 1
                  << " a=" << w->element + 1 << '\n';
      }
    }
    return 0;
  }
  if (optimum_cmd->parsed()) {
    const SetFamily f = load_family(second_path, g);
    std::cout << fmt(optimum(f, parse_weighting(read_file(third_path)), parse_sense(sense_text)))
              << '\n';
    return 0;
  }
  if (similar_cmd->parsed()) {
    std::cout << yes(similar(load_vectors(second_path, g), load_vectors(third_path, g))) << '\n';
    return 0;
  }
  if (sample_cmd->parsed()) {
    std::cout << "fraction: " << fmt(kdense_sampling_experiment(n, trials, g.seed, g.exec()))
              << '\n';
    return 0;
  }
  if (cmax_cmd->parsed() || cmin_cmd->parsed()) {
    const Circuit c = load_circuit(circuit_path);
    const VectorSet a = load_vectors(second_path, g);
    const Rational r = Rational::parse(factor_text);
    const auto bundle = cmax_cmd->parsed() ? certify_max(c, a, r, g.certify())
                                           : certify_min(c, a, r, g.certify());
    print_bundle(bundle, fmt);
    return 0;
  }
  if (factor_cmd->parsed()) {
    const Circuit c = load_circuit(circuit_path);
    const Sense sense = sense_text.empty()
                            ? (c.semiring() == Semiring::MinPlus ? Sense::Min : Sense::Max)
                            : parse_sense(sense_text);
    print_factor(exact_factor(c, load_vectors(second_path, g), sense, g.certify()), fmt);
    return 0;
  }
  if (sdeg_cmd->parsed()) {
    const DegreeResult r =
        semantic_degree(load_circuit(circuit_path), load_vectors(second_path, g), g.certify());
    std::cout << "degree: " << (r.finite ? fmt(r.value) : "infinite") << '\n';
    if (r.witness) std::cout << "witness: " << to_string(*r.witness) << '\n';
    return 0;
  }
  if (bool_cmd->parsed()) {
    std::cout << "consistent: "
              << yes(boolean_bound_check(load_circuit(circuit_path),
                                         load_vectors(second_path, g), g.max_produced))
              << '\n';
    return 0;
  }
  if (arith_cmd->parsed()) {
    const bool ok = arithmetic_witness_check(load_circuit(circuit_path),
                                             load_family(second_path, g),
                                             Rational::parse(factor_text), g.certify());
    std::cout << "conditions-hold: " << yes(ok) << '\n';
    return 0;
  }
  if (decomp_cmd->parsed()) {
    const Circuit c = load_circuit(circuit_path);
    const Decomposition dec =
        decompose(c, inner_product_norm(parse_rational_list(norm_text)),
                  parse_vector(target_text), Rational::parse(theta_text), g.max_produced);
    std::cout << "gate: g" << dec.gate << "\nx: " << to_string(dec.x) << "\ny: "
              << to_string(dec.y) << "\nmu(x): " << fmt(dec.norm_x) << "\nmu(b): "
              << fmt(dec.norm_b) << "\npath:";
    for (auto v : dec.path) std::cout << " g" << v;
    std::cout << '\n';
    return 0;
  }
  if (audit_cmd->parsed()) {
    const Circuit c = load_circuit(circuit_path);
    const SetFamily f = load_family(second_path, g);
    const AuditReport rep = audit_circuit_rectangles(
        c, f, Rational::parse(factor_text), Rational::parse(beta_text), g.max_produced, g.exec());
    for (const auto& ra : rep.rectangles) {
      std::cout << "rectangle g" << ra.gate << " |A|=" << ra.a_count << " |B|=" << ra.b_count
                << " below=" << yes(ra.below) << " disjoint=" << yes(ra.disjoint)
                << " balanced=" << ra.balanced << '\n';
    }
    std::cout << "below-F: " << yes(rep.all_below) << "\ncross-disjoint: "
              << yes(rep.all_disjoint) << "\nlarge-sets: " << rep.large_sets
              << "\nuncovered: " << rep.uncovered.size() << "\ntraversal-hits: "
              << rep.traversal_hits << "\nvector-set-agree: " << yes(rep.vector_set_agree)
              << "\nh-max: " << rep.h_max << "\nimplied-bound: " << (rep.implied_bound ? fmt(*rep.implied_bound) : "none")
              << "\nholds: " << yes(rep.holds()) << '\n';
    return 0;
  }
  if (bound_cmd->parsed()) {
    if (kind == "design") {
      const DesignBound b = design_bound(m, d, Rational::parse(beta_text.empty() ? "1/2" : beta_text));
      std::cout << "l: " << fmt(b.l) << "\nl-ceil: " << b.l_ceil << "\nl-floor: " << b.l_floor
                << "\n|F|: " << b.family_size.get_str() << "\ndeg-ceil: "
                << b.degree_ceil.get_str() << "\ndeg-floor: " << b.degree_floor.get_str()
                << "\nbound: " << b.bound.get_str() << "\nbound-floor: "
                << b.bound_floor.get_str() << "\nfactor: " << fmt(b.factor) << '\n';
    } else if (kind == "matching") {
      const MatchingBound b = matching_bound(m, k, Rational::parse(r_text));
      std::cout << "d: " << b.d << "\nnumerator: " << b.numerator.get_str()
                << "\ndenominator: " << b.denominator.get_str() << "\nbound: " << fmt(b.bound)
                << '\n';
    } else if (kind == "counting") {
      const CountingBound b = counting_bound(n);
      std::cout << "t: " << b.t.get_str() << "\nlog2-L-floor: " << b.log2_l_floor
                << "\nlog2-M: " << fmt(b.log2_m) << "\nL<M: " << yes(b.l_below_m)
                << "\n2L<=M: " << yes(b.double_l_below_m) << '\n';
    } else {
      throw PreconditionError("bound: unknown kind " + kind);
    }
    return 0;
  }
  if (greedy_cmd->parsed() || gbad_cmd->parsed()) {
    const SetFamily f = load_family(second_path, g);
    const Weighting x = parse_weighting(read_file(third_path));
    const Sense sense = sense_text.empty() ? Sense::Max : parse_sense(sense_text);
    print_run(greedy_cmd->parsed() ? greedy_run(f, x, sense) : wrong_strategy_run(f, x, sense),
              fmt);
    return 0;
  }
  if (gfactor_cmd->parsed()) {
    const SetFamily f = load_family(second_path, g);
    const Sense sense = sense_text.empty() ? Sense::Max : parse_sense(sense_text);
    const GreedyEstimate est = greedy_factor_estimate(f, trials, g.seed, sense, g.exec());
    std::cout << "runs: " << est.runs << "\nstructured: " << est.structured
              << "\nmax-ratio: " << (est.max_ratio ? fmt(*est.max_ratio) : "infinite")
              << "\nbound-m: " << f.max_set_size() << "\nworst:";
    for (const auto& w : est.worst) std::cout << ' ' << w.to_string();
    std::cout << '\n';
    return 0;
  }
  if (report_cmd->parsed()) {
    rp.seed = g.seed;
    rp.produced_limit = g.max_produced;
    rp.exec = g.exec();
    Table table(std::cout, fmt);
    std::cout << "report " << kind << '\n';
    bool ok = false;
    if (kind == "hierarchy") {
      ok = report_hierarchy(rp, table);
    } else if (kind == "sidon") {
      ok = report_sidon(rp, table);
    } else if (kind == "greedy") {
      ok = report_greedy(rp, table);
    } else if (kind == "decomposition") {
      ok = report_decomposition(rp, table);
    } else if (kind == "counting") {
      ok = report_counting(rp, table);
    } else {
      throw PreconditionError("report: unknown suite " + kind);
    }
    std::cout << "result: " << (ok ? "all passed" : std::to_string(table.failures()) + " failed")
              << '\n';
    return ok ? 0 : 3;
  }
  return 1;
}

}  // namespace
}  // namespace troplab::cli

int main(int argc, char** argv) {
  try {
    return troplab::cli::run(argc, argv);
  } catch (const troplab::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return 2;
  } catch (const troplab::InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return 3;
  } catch (const troplab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
