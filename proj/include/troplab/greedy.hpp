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


#ifndef TROPLAB_GREEDY_HPP_
#define TROPLAB_GREEDY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "troplab/family.hpp"
#include "troplab/parallel.hpp"
#include "troplab/rational.hpp"

namespace troplab {

struct GreedyStep {
  std::size_t element = 0;
  bool accepted = false;  // added (best-in) or kept (worst-out)
};

struct GreedyRun {
  ElementSet solution;
  Rational value;
  Rational optimum;
  // optimum/value for max, value/optimum for min; nullopt means infinite.
  // 0/0 counts as 1.
  std::optional<Rational> ratio;
  std::vector<GreedyStep> trace;
};

// Heaviest-first order; equal weights go lowest index first.
std::vector<std::size_t> heaviest_first(const Weighting& x);
std::vector<std::size_t> lightest_first(const Weighting& x);

// Best-in with an extendability oracle for max, worst-out with a
// containment oracle for min. F must be a nonempty antichain.
GreedyRun greedy_run(const SetFamily& f, const Weighting& x, Sense sense);

// Lightest-first worst-out for max and best-in for min. A baseline only.
GreedyRun wrong_strategy_run(const SetFamily& f, const Weighting& x, Sense sense);

struct GreedyEstimate {
  std::optional<Rational> max_ratio;  // nullopt means infinite
  Weighting worst;
  std::size_t runs = 0;
  std::size_t structured = 0;
};

// Random weightings plus structured ones: characteristic vectors of
// members, star patterns (one outside element at 20/19 over a member at 1)
// and, for non-matroid uniform families, the exchange-violation weighting.
// Throws InvariantError if a ratio exceeds the largest set size.
GreedyEstimate greedy_factor_estimate(const SetFamily& f, std::size_t trials,
                                      std::uint64_t seed, Sense sense = Sense::Max,
                                      Execution exec = Execution::Parallel);

Weighting random_weighting(std::size_t n, std::uint64_t seed);

// A weighting on which max greedy is strictly suboptimal. Tries the
// exchange-violation pattern first, then random search.
std::optional<Weighting> non_matroid_witness(const SetFamily& f, std::size_t trials,
                                             std::uint64_t seed);

// The star K_{1,m}: element 0 is the center, 1..m the leaves.
SetFamily star_family(std::size_t m);
Weighting star_weighting(std::size_t m, const Rational& epsilon);

}  // namespace troplab

#endif  // TROPLAB_GREEDY_HPP_
