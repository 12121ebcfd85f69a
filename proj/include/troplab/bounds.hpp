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


#ifndef TROPLAB_BOUNDS_HPP_
#define TROPLAB_BOUNDS_HPP_

#include <cstdint>

#include "troplab/rational.hpp"

namespace troplab {

// Lower bound for approximating designs: |F| / deg(F, l) with l = beta*d/2
// and deg(F, l) = m^(d-l) for integer l. Both roundings of l are reported;
// the ceiling is the one the bound uses.
struct DesignBound {
  std::uint32_t m = 0;
  std::uint32_t d = 0;
  Rational beta;
  Rational l;
  std::uint32_t l_ceil = 0;
  std::uint32_t l_floor = 0;
  Integer family_size;
  Integer degree_ceil;
  Integer degree_floor;
  Integer bound;        // m^l_ceil
  Integer bound_floor;  // m^l_floor
  Rational factor;      // (1 - beta) m / d
};

DesignBound design_bound(std::uint32_t m, std::uint32_t d, const Rational& beta);

// Hypergraph-matching bound C(2d, d)^(k-1) / C(m, 2d) with d = ceil(m / 3r).
struct MatchingBound {
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  Rational r;
  std::uint32_t d = 0;
  Integer numerator;
  Integer denominator;
  Rational bound;
};

MatchingBound matching_bound(std::uint32_t m, std::uint32_t k, const Rational& r);

// Circuit counting: t = floor(2^n / n^3), L = 2^t (t+n)^(2t), and
// M = 2^(C(n, n/2) / n). Comparisons are done on exact integers:
// L < M iff L^n < 2^C(n, n/2).
struct CountingBound {
  std::uint32_t n = 0;
  Integer t;
  Integer middle_binomial;
  std::uint64_t log2_l_floor = 0;  // floor(log2 L)
  Rational log2_m;                 // C(n, n/2) / n
  bool l_below_m = false;
  bool double_l_below_m = false;   // (2L)^n <= 2^C, so M - L >= L
};

inline constexpr std::uint32_t kMaxCountingArity = 32;

CountingBound counting_bound(std::uint32_t n);

Integer binomial(std::uint64_t n, std::uint64_t k);

}  // namespace troplab

#endif  // TROPLAB_BOUNDS_HPP_
