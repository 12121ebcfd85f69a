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

#ifndef TROPLAB_GENERATORS_HPP_
#define TROPLAB_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include "troplab/family.hpp"
#include "troplab/vectors.hpp"

namespace troplab {

// Polynomial (m,d)-design over the grid GF(m) x GF(m). The point (a, b), with
// a and b field elements in canonical index order, is ground element
// a*m + b, so rows (fixed a) are consecutive blocks of m elements.
struct DesignSpec {
  std::uint32_t m = 0;
  std::uint32_t d = 0;
};

inline constexpr std::uint32_t kMaxDesignOrder = 9;

std::size_t design_point(const DesignSpec& spec, std::uint32_t a, std::uint32_t b);
// One set {(a, p(a)) : a in GF(m)} per polynomial p of degree < d.
SetFamily polynomial_design(const DesignSpec& spec);

// Largest number of members containing a common l-element set.
std::size_t max_degree(const SetFamily& f, std::size_t l);

// H_l: m-subsets of [n] whose element sum (1-based) is l mod n.
SetFamily graham_sloane(std::size_t n, std::size_t m, std::size_t l);
// Residue l with the largest |H_l| (smallest such l).
std::size_t graham_sloane_best_residue(std::size_t n, std::size_t m);

// Perfect matchings of the complete k-partite k-uniform hypergraph with
// parts of size m. Edge (v_1, ..., v_k), v_j in [0, m), is ground element
// sum_j v_j m^(k-1-j).
struct HypergraphSpec {
  std::uint32_t m = 0;
  std::uint32_t k = 0;
};

inline constexpr std::uint64_t kMaxMatchings = 100000;

std::size_t hypergraph_edge(const HypergraphSpec& spec,
                            const std::vector<std::uint32_t>& vertices);
SetFamily hypergraph_matchings(const HypergraphSpec& spec);

// {(a, a^3, not a, not a^3) : a in {0,1}^m}, reading a as the coefficient
// vector of an element of GF(2^m). Requires odd m in [3, 13].
VectorSet sidon_cubic(std::uint32_t m);

}  // namespace troplab

#endif  // TROPLAB_GENERATORS_HPP_
