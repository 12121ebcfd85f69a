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

#ifndef TROPLAB_LP_HPP_
#define TROPLAB_LP_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "troplab/rational.hpp"
#include "troplab/vectors.hpp"

namespace troplab {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LpConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

enum class Goal { Minimize, Maximize };

// Optimize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LpConstraint> constraints;
  std::vector<Rational> objective;  // empty: pure feasibility
  Goal goal = Goal::Minimize;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational value;
  std::size_t pivots = 0;
};

// Exact two-phase simplex on a dense rational tableau with Bland's rule.
LpResult solve(const LinearProgram& lp);

enum class Direction {
  Below,  // exists c in conv(V) with u <= c
  Above,  // exists c in conv(V) with u >= c
};

struct DominanceQuery {
  std::vector<Rational> target;
  std::vector<ExponentVector> generators;
  Direction direction = Direction::Below;
  // Only generators whose support equals supp(target) may be used.
  bool tight = false;
};

struct Certificate {
  bool verdict = false;
  std::vector<Rational> target;
  Direction direction = Direction::Below;
  // (generator index, multiplier), multipliers positive and summing to 1.
  std::vector<std::pair<std::size_t, Rational>> lambda;
  std::string note;
};

// Decides the query exactly. A positive verdict carries a convex
// combination that has been re-verified before returning; a negative one
// names the target that admits none.
Certificate lp_feasible(const DominanceQuery& q);

// Direct arithmetic check of a positive certificate against its query.
bool verify_witness(const DominanceQuery& q, const Certificate& c);

std::vector<Rational> to_rational(const ExponentVector& v);
std::vector<Rational> scaled(const ExponentVector& v, const Rational& factor);

// Receives every decided query while in scope (used by cross-checks). Calls
// are serialized; observers nest, innermost wins.
using DominanceObserver =
    std::function<void(const DominanceQuery&, const Certificate&)>;

class ScopedDominanceObserver {
 public:
  explicit ScopedDominanceObserver(DominanceObserver observer);
  ~ScopedDominanceObserver();
  ScopedDominanceObserver(const ScopedDominanceObserver&) = delete;
  ScopedDominanceObserver& operator=(const ScopedDominanceObserver&) = delete;

 private:
  DominanceObserver previous_;
};

}  // namespace troplab

#endif  // TROPLAB_LP_HPP_
