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


#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "troplab/certifier.hpp"
#include "troplab/constructions.hpp"
#include "troplab/error.hpp"
#include "troplab/generators.hpp"
#include "troplab/random.hpp"

namespace troplab {
namespace {

const Rational kStep(1, 1000);

Circuit square_of_product(Semiring s) {
  // (x1 x2)^2, produced set {(2,2)}
  CircuitBuilder b(s, 2);
  const NodeId x1 = b.var(0);
  const NodeId p = b.mul(x1, b.var(1));
  return b.build(b.mul(p, p));
}

Circuit square(Semiring s) {
  CircuitBuilder b(s, 1);
  const NodeId x = b.var(0);
  return b.build(b.mul(x, x));
}

// Circuit whose produced set is exactly `a` (sum of products of variables).
Circuit circuit_for(const VectorSet& a, Semiring s) {
  CircuitBuilder b(s, a.arity());
  std::vector<NodeId> terms;
  for (const auto& v : a) {
    std::vector<NodeId> factors;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::uint32_t e = 0; e < v[i]; ++e) factors.push_back(b.var(i));
    }
    terms.push_back(b.mul_all(factors));
  }
  return b.build(b.add_all(terms));
}

const VectorSet kPairs(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});

TEST(CertifyMax, Examples) {
  const Circuit sel = selection_circuit(4, 1);
  const CertificateBundle yes = certify_max(sel, kPairs, Rational(2));
  EXPECT_TRUE(yes.verdict);
  for (const auto& chk : yes.validity) EXPECT_TRUE(chk.certificate.verdict);
  for (const auto& chk : yes.coverage) {
    ASSERT_TRUE(chk.certificate.verdict);
    EXPECT_TRUE(verify_witness(query_for(yes, chk), chk.certificate));
  }
  const CertificateBundle no = certify_max(sel, kPairs, Rational(3, 2));
  EXPECT_FALSE(no.verdict);
  for (const auto& chk : no.coverage) {
    EXPECT_FALSE(chk.certificate.verdict);
    EXPECT_FALSE(oracle::fm_dominance(query_for(no, chk)));
  }
  EXPECT_TRUE(certify_max(circuit_for(kPairs, Semiring::MaxPlus), kPairs, Rational(1)).verdict);
  EXPECT_THROW(certify_max(sel, kPairs, Rational(1, 2)), PreconditionError);
  EXPECT_THROW(certify_max(convert(sel, Semiring::MinPlus), kPairs, Rational(2)), PreconditionError);
}

TEST(CertifyMax, NonzeroOffsetsFail) {
  CircuitBuilder b(Semiring::MaxPlus, 1);
  const Circuit c = b.build(b.mul(b.var(0), b.constant(Rational(1))));
  EXPECT_FALSE(certify_max(c, VectorSet(1, {{1}}), Rational(5)).verdict);
}

TEST(CertifyMin, Examples) {
  const VectorSet a(2, {{1, 1}});
  const Circuit c = square_of_product(Semiring::MinPlus);
  EXPECT_TRUE(certify_min(c, a, Rational(2)).verdict);
  EXPECT_FALSE(certify_min(c, a, Rational(3, 2)).verdict);
  EXPECT_TRUE(certify_min(circuit_for(a, Semiring::MinPlus), a, Rational(1)).verdict);
  // General (non 0-1) A uses the convex-hull form.
  const VectorSet g(2, {{2, 0}, {0, 2}});
  const Circuit cg = circuit_for(VectorSet(2, {{2, 0}, {0, 2}, {1, 1}}), Semiring::MinPlus);
  const CertificateBundle bundle = certify_min(cg, g, Rational(1));
  EXPECT_FALSE(bundle.antichain_mode);
  EXPECT_TRUE(bundle.verdict);
}

TEST(ExactFactor, Examples) {
  FactorResult r = exact_factor(selection_circuit(4, 1), kPairs, Sense::Max);
  ASSERT_EQ(r.kind, FactorResult::Kind::Finite);
  EXPECT_EQ(r.value, Rational(2));
  r = exact_factor(sidon_approximator(3), sidon_cubic(3), Sense::Max);
  ASSERT_EQ(r.kind, FactorResult::Kind::Finite);
  EXPECT_LE(r.value, Rational(2));
  r = exact_factor(circuit_for(kPairs, Semiring::MaxPlus), kPairs, Sense::Max);
  EXPECT_EQ(r.value, Rational(1));
  // Validity side fails: x1 + x3 is not below conv(A).
  r = exact_factor(selection_circuit(4, 2), kPairs, Sense::Max);
  EXPECT_EQ(r.kind, FactorResult::Kind::Invalid);
  // Min sense: x1 alone is not above (1,1).
  const Circuit x1 = circuit_for(VectorSet(2, {{1, 0}}), Semiring::MinPlus);
  EXPECT_EQ(exact_factor(x1, VectorSet(2, {{1, 1}}), Sense::Min).kind,
            FactorResult::Kind::Invalid);
  // Valid but r (1,1,0) is never above (1,1,1).
  const Circuit wide = circuit_for(VectorSet(3, {{1, 1, 1}}), Semiring::MinPlus);
  EXPECT_EQ(exact_factor(wide, VectorSet(3, {{1, 1, 0}}), Sense::Min).kind,
            FactorResult::Kind::Infinite);
  // Offsets only count through B0: min(x1 + 3, x2) has no finite factor.
  CircuitBuilder ob(Semiring::MinPlus, 2);
  const NodeId shifted = ob.mul(ob.var(0), ob.constant(Rational(3)));
  const Circuit offset = ob.build(ob.add(shifted, ob.var(1)));
  EXPECT_EQ(exact_factor(offset, VectorSet(2, {{1, 0}, {0, 1}}), Sense::Min).kind,
            FactorResult::Kind::Infinite);
  const Circuit sq = square_of_product(Semiring::MinPlus);
  r = exact_factor(sq, VectorSet(2, {{1, 1}}), Sense::Min);
  ASSERT_EQ(r.kind, FactorResult::Kind::Finite);
  EXPECT_EQ(r.value, Rational(2));
}

TEST(ExactFactor, InfiniteWhenNoSameSupportVector) {
  // min(x1 + x2, x1 + x3) on A = {{1,2},{1,3},{2,3}}: no produced vector has
  // support {2,3}, but everything in B lies above A.
  const VectorSet a(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  const Circuit c = circuit_for(VectorSet(3, {{1, 1, 0}, {1, 0, 1}, {1, 1, 1}}), Semiring::MinPlus);
  const FactorResult r = exact_factor(c, a, Sense::Min);
  EXPECT_EQ(r.kind, FactorResult::Kind::Infinite);
}

struct MaxInstance {
  std::string name;
  Circuit circuit;
  VectorSet a;
};

std::vector<MaxInstance> max_instances() {
  std::vector<MaxInstance> out;
  out.push_back({"sel41-pairs", selection_circuit(4, 1), kPairs});
  for (auto [m, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {3, 2}}) {
    out.push_back({"design", design_approximator({m, d}), polynomial_design({m, d}).characteristic_vectors()});
  }
  out.push_back({"sidon3", sidon_approximator(3), sidon_cubic(3)});
  for (const auto& nf : corpus::graham_matroids()) {
    const std::size_t m = *nf.family.uniform_size();
    out.push_back({nf.name, selection_circuit(nf.family.ground_size(), m - 1),
                   nf.family.characteristic_vectors()});
  }
  std::mt19937_64 rng(808);
  oracle::Gen gen(809);
  for (int i = 0; i < 20; ++i) {
    RandomCircuitSpec spec;
    spec.semiring = Semiring::MaxPlus;
    spec.num_vars = 2 + rng() % 4;
    spec.gates = 2 + rng() % 8;
    spec.mul_percent = 35;
    const Circuit c = random_circuit(spec, rng);
    std::vector<ExponentVector> a = maximal_elements(produced_set(c)).vectors();
    a.push_back(gen.vector(spec.num_vars, 2));
    out.push_back({"random" + std::to_string(i), c, VectorSet(spec.num_vars, a)});
  }
  return out;
}

Rational f_max(const VectorSet& a, const Weighting& x) {
  Rational best = inner_product(a[0], x);
  for (const auto& v : a) best = std::max(best, inner_product(v, x));
  return best;
}

TEST(CertifyMax, MonotoneInFactorAndSoundOnWeightings) {
  oracle::Gen gen(91);
  std::size_t finite = 0;
  for (const auto& inst : max_instances()) {
    const FactorResult fr = exact_factor(inst.circuit, inst.a, Sense::Max);
    if (fr.kind != FactorResult::Kind::Finite) continue;
    ++finite;
    const Rational r = fr.value;
    ASSERT_TRUE(certify_max(inst.circuit, inst.a, r).verdict) << inst.name;
    ASSERT_TRUE(certify_max(inst.circuit, inst.a, r + kStep).verdict) << inst.name;
    ASSERT_TRUE(certify_max(inst.circuit, inst.a, r + 3).verdict) << inst.name;
    if (r - kStep >= Rational(1)) {
      ASSERT_FALSE(certify_max(inst.circuit, inst.a, r - kStep).verdict) << inst.name;
    }
    const std::size_t n = inst.a.arity();
    std::vector<Weighting> xs;
    for (int t = 0; t < 1000; ++t) xs.push_back(gen.weighting(n));
    if (n <= 12) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Weighting x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = Rational((mask >> i) & 1);
        xs.push_back(x);
      }
    }
    const auto values = evaluate_many(inst.circuit, xs);
    for (std::size_t t = 0; t < xs.size(); ++t) {
      const Rational f = f_max(inst.a, xs[t]);
      ASSERT_LE(values[t], f) << inst.name;
      ASSERT_LE(f / r, values[t]) << inst.name;
    }
  }
  EXPECT_GT(finite, 15u);
}

TEST(CertifyMin, MonotoneInFactorAndSoundOnWeightings) {
  oracle::Gen gen(92);
  for (const auto& mc : corpus::minplus_cases()) {
    const FactorResult fr = exact_factor(mc.circuit, mc.a, Sense::Min);
    ASSERT_EQ(fr.kind, FactorResult::Kind::Finite) << mc.name;
    const Rational r = fr.value;
    ASSERT_TRUE(certify_min(mc.circuit, mc.a, r).verdict) << mc.name;
    ASSERT_TRUE(certify_min(mc.circuit, mc.a, r + kStep).verdict) << mc.name;
    if (r - kStep >= Rational(1)) {
      ASSERT_FALSE(certify_min(mc.circuit, mc.a, r - kStep).verdict) << mc.name;
    }
    for (int t = 0; t < 300; ++t) {
      const Weighting x = gen.weighting(mc.a.arity());
      Rational f = inner_product(mc.a[0], x);
      for (const auto& v : mc.a) f = std::min(f, inner_product(v, x));
      const Rational value = evaluate(mc.circuit, x);
      ASSERT_LE(f, value) << mc.name;
      ASSERT_LE(value, r * f) << mc.name;
    }
  }
}

TEST(Homogeneity, ConstantFreeTropicalCircuits) {
  std::mt19937_64 rng(93);
  oracle::Gen gen(94);
  for (int i = 0; i < 100; ++i) {
    RandomCircuitSpec spec;
    spec.semiring = i % 2 ? Semiring::MaxPlus : Semiring::MinPlus;
    spec.num_vars = 1 + rng() % 6;
    spec.gates = 1 + rng() % 12;
    const Circuit c = random_circuit(spec, rng);
    const Weighting x = gen.weighting(spec.num_vars);
    const Rational lambda = gen.rational();
    Weighting y = x;
    for (auto& e : y) e *= lambda;
    ASSERT_EQ(evaluate(c, y), lambda * evaluate(c, x));
  }
}

TEST(SemanticDegree, Examples) {
  const Circuit sq = square(Semiring::Boolean);
  DegreeResult d = semantic_degree(sq, VectorSet(1, {{1}}));
  ASSERT_TRUE(d.finite);
  EXPECT_EQ(d.value, Rational(2));
  const VectorSet a(2, {{1, 0}, {0, 1}});
  d = semantic_degree(circuit_for(VectorSet(2, {{1, 0}, {0, 1}, {1, 1}}), Semiring::Boolean), a);
  EXPECT_EQ(d.value, Rational(1));
  for (std::size_t n : {3u, 4u}) {
    d = semantic_degree(bellman_ford_circuit(n, 0, n - 1, Semiring::Boolean),
                        oracle::simple_paths(n, 0, n - 1));
    EXPECT_EQ(d.value, Rational(1)) << n;
  }
  EXPECT_THROW(semantic_degree(sq, VectorSet(1, {{2}})), PreconditionError);
  EXPECT_THROW(semantic_degree(convert(sq, Semiring::MinPlus), VectorSet(1, {{1}})),
               PreconditionError);
}

TEST(SemanticDegree, SpanningTreeCircuitsStayBelowVertexCount) {
  for (std::size_t n : {3u, 4u}) {
    const DegreeResult d = semantic_degree(spanning_tree_boolean(n), oracle::spanning_trees(n));
    ASSERT_TRUE(d.finite);
    EXPECT_LE(d.value, Rational(static_cast<std::int64_t>(n - 1)));
  }
}

TEST(SemanticDegree, CompositionAndSyntacticBound) {
  std::mt19937_64 rng(95);
  auto random_boolean = [&](std::size_t n) {
    RandomCircuitSpec spec;
    spec.semiring = Semiring::Boolean;
    spec.num_vars = n;
    spec.gates = 1 + rng() % 7;
    spec.mul_percent = 40;
    return random_circuit(spec, rng);
  };
  auto degree = [](const Circuit& c) {
    const DegreeResult d = semantic_degree(c, corpus::minimal_supports(produced_set(c)));
    EXPECT_TRUE(d.finite);
    return d.value;
  };
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 4;
    const Circuit c1 = random_boolean(n);
    const Circuit c2 = random_boolean(n);
    const Rational d1 = degree(c1);
    const Rational d2 = degree(c2);
    ASSERT_LE(d1, Rational(syntactic_degree(c1)));
    ASSERT_LE(Rational(1), d1);
    ASSERT_LE(degree(corpus::join(c1, c2, NodeKind::Add)), std::max(d1, d2)) << i;
    ASSERT_LE(degree(corpus::join(c1, c2, NodeKind::Mul)), d1 + d2) << i;
  }
}

TEST(BoundedCopies, Examples) {
  const VectorSet a(1, {{1}});
  EXPECT_TRUE(bounded_copy_checks(a, a, Rational(1)).sufficient);
  BoundedCopyReport r = bounded_copy_checks(a, VectorSet(1, {{2}}), Rational(2));
  EXPECT_TRUE(r.sufficient);
  EXPECT_TRUE(r.necessary);
  r = bounded_copy_checks(a, VectorSet(1, {{2}}), Rational(1));
  EXPECT_FALSE(r.sufficient);
  EXPECT_EQ(r.without_copy.size(), 1u);
  EXPECT_TRUE(has_bounded_copy(VectorSet(2, {{3, 1}}), {1, 1}, Rational(3)));
  EXPECT_FALSE(has_bounded_copy(VectorSet(2, {{3, 1}}), {1, 1}, Rational(5, 2)));
}

TEST(BoundedCopies, NecessaryConditionHoldsAtTheDegree) {
  std::mt19937_64 rng(96);
  for (int i = 0; i < 100; ++i) {
    RandomCircuitSpec spec;
    spec.semiring = Semiring::Boolean;
    spec.num_vars = 2 + rng() % 4;
    spec.gates = 1 + rng() % 7;
    const Circuit c = random_circuit(spec, rng);
    const VectorSet b = produced_set(c);
    const VectorSet a = corpus::minimal_supports(b);
    const DegreeResult d = semantic_degree(c, a);
    const BoundedCopyReport rep = bounded_copy_checks(a, b, d.value);
    ASSERT_TRUE(rep.necessary) << i;
    if (bounded_copy_checks(a, b, Rational(1)).sufficient) ASSERT_EQ(d.value, Rational(1));
  }
}

TEST(BooleanBound, CertifiedCircuitsComputeTheBooleanFunction) {
  for (const auto& mc : corpus::minplus_cases()) {
    EXPECT_TRUE(boolean_bound_check(mc.circuit, mc.a)) << mc.name;
    VectorSet b = produced_set(strip_constants(mc.circuit));
    const VectorSet supports = corpus::minimal_supports(b);
    std::vector<ExponentVector> kept;
    for (const auto& v : b) {
      if (!leq(supports[0], v)) kept.push_back(v);
    }
    EXPECT_FALSE(boolean_bound_check(VectorSet(b.arity(), kept), mc.a)) << mc.name;
  }
  const VectorSet a(2, {{1, 1}});
  EXPECT_TRUE(boolean_bound_check(circuit_for(a, Semiring::MinPlus), a));
}

TEST(ArithmeticWitness, Examples) {
  const SetFamily f(3, std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  EXPECT_TRUE(arithmetic_witness_check(circuit_for(f.characteristic_vectors(), Semiring::Arithmetic), f,
                                       Rational(1)));
  const SetFamily one(1, std::vector<std::vector<std::size_t>>{{0}});
  EXPECT_TRUE(arithmetic_witness_check(square(Semiring::Arithmetic), one, Rational(2)));
  EXPECT_FALSE(arithmetic_witness_check(square(Semiring::Arithmetic), one, Rational(1)));
  CircuitBuilder b(Semiring::Arithmetic, 2);
  const NodeId x1 = b.var(0);
  const Circuit k = b.build(b.mul(b.constant(Rational(3)), b.add(x1, b.var(1))));
  const Circuit mp = arithmetic_to_minplus(k);
  EXPECT_EQ(mp.semiring(), Semiring::MinPlus);
  EXPECT_EQ(evaluate(mp, Weighting{4, 5}), Rational(4));
}

}  // namespace
}  // namespace troplab
