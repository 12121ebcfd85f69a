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

#ifndef TROPLAB_DECOMPOSITION_HPP_
#define TROPLAB_DECOMPOSITION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "troplab/circuit.hpp"
#include "troplab/family.hpp"
#include "troplab/parallel.hpp"
#include "troplab/rational.hpp"
#include "troplab/vectors.hpp"

namespace troplab {

// X = pr(v), the set produced at node v, and its residue
// Y = compl(v) = {y : X + y is a subset of B}, B the circuit's produced set.
struct GateSumset {
  NodeId gate = 0;
  VectorSet produced;
  VectorSet residue;
};

// One entry per node, in node order. Residue candidates are b - x0 for a
// fixed x0 in X and b >= x0 in B (every residue vector has this form), kept
// when x + y lies in B for all x in X.
std::vector<GateSumset> residues(const Circuit& c,
                                 std::size_t limit = kDefaultProducedLimit,
                                 Execution exec = Execution::Parallel);

using NormMeasure = std::function<Rational(const ExponentVector&)>;

// mu_a(x) = <a, x>; requires every a_i in [0, 1].
NormMeasure inner_product_norm(const std::vector<Rational>& a);

// Checks mu(0) <= 1, mu(e_i) <= 1, and mu(x) <= mu(x + y) <= mu(x) + mu(y)
// for all pairs of the given vectors. The axioms quantify over all of N^n;
// this only covers the finite set an audit touches. Returns violations.
std::vector<std::string> check_norm_axioms(const NormMeasure& mu, std::size_t n,
                                           const std::vector<ExponentVector>& vectors);

struct Decomposition {
  NodeId gate = 0;
  ExponentVector x;  // in pr(gate)
  ExponentVector y;  // in compl(gate)
  Rational norm_x;
  Rational norm_b;
  std::vector<NodeId> path;  // nodes visited from the output down
};

// Walks backwards from the output holding a split b = x + y with
// x in pr(v), y in compl(v); at a Minkowski (Mul) node it moves to the child
// whose part of x has the larger norm. Returns the first node where
// mu(x) <= theta mu(b), so (theta/2) mu(b) < mu(x) <= theta mu(b).
// Requires b in B, mu(b) > 1 and 1/mu(b) <= theta < 1.
Decomposition decompose(const Circuit& c, const NormMeasure& mu,
                        const ExponentVector& b, const Rational& theta,
                        std::size_t limit = kDefaultProducedLimit);
// Same, reusing precomputed produced sets (indexed by node).
Decomposition decompose(const Circuit& c, const std::vector<VectorSet>& produced,
                        const NormMeasure& mu, const ExponentVector& b,
                        const Rational& theta);

// Rectangle A v B = {A u B}; sides may contain the empty set.
struct Rectangle {
  std::size_t ground_size = 0;
  std::vector<ElementSet> a_side;
  std::vector<ElementSet> b_side;
};

bool cross_disjoint(const Rectangle& r);
// Every union A u B is contained in a member of f.
bool lies_below(const Rectangle& r, const SetFamily& f);

// |F n (A u B)| >= |F|/r, |F n A| > beta |F| / 2r, |F n B| >= (1-beta)|F|/r
// for some A, B of the rectangle.
bool balanced_in_rectangle(const ElementSet& f, const Rectangle& rect,
                           const Rational& r, const Rational& beta);
// The same three inequalities read on vectors: <a,x+y>, <a,x>, <a,y>.
bool balanced_vectors(const ExponentVector& a, const VectorSet& x,
                      const VectorSet& y, const Rational& r, const Rational& beta);

Rectangle rectangle_of(const GateSumset& s);

struct RectangleAudit {
  NodeId gate = 0;
  std::size_t a_count = 0;
  std::size_t b_count = 0;
  bool below = false;
  bool disjoint = false;
  std::size_t balanced = 0;  // large members of F appearing balanced here
};

struct AuditReport {
  std::vector<RectangleAudit> rectangles;
  bool all_below = false;
  bool all_disjoint = false;
  std::size_t large_sets = 0;  // members with at least r/beta elements
  std::vector<ElementSet> uncovered;
  // Large members whose balanced rectangle is the one the decomposition
  // traversal (norm mu_a, theta = beta) lands on.
  std::size_t traversal_hits = 0;
  // Vector-level and set-level balancedness agree on every pair tested.
  bool vector_set_agree = true;
  std::size_t h_max = 0;
  std::optional<Rational> implied_bound;  // large_sets / h_max
  bool coverage() const { return uncovered.empty(); }
  bool holds() const { return all_below && all_disjoint && coverage(); }
};

// Rectangles from the node sumsets of a max-plus circuit certified at r
// against F (PreconditionError otherwise), audited for the three rectangle
// properties with balance parameter 0 < beta < 1.
AuditReport audit_circuit_rectangles(const Circuit& c, const SetFamily& f,
                                     const Rational& r, const Rational& beta,
                                     std::size_t limit = kDefaultProducedLimit,
                                     Execution exec = Execution::Parallel);

}  // namespace troplab

#endif  // TROPLAB_DECOMPOSITION_HPP_
