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

#ifndef TROPLAB_CONSTRUCTIONS_HPP_
#define TROPLAB_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "troplab/circuit.hpp"
#include "troplab/generators.hpp"

namespace troplab {

// Appends gates computing the sum of the k largest of `inputs` (read in a
// max-plus circuit) via Sel^{j}_{i} = max(Sel^{j-1}_i, Sel^{j-1}_{i-1} + x_j),
// creating only the DP cells the result depends on. Uses at most
// 2 k |inputs| gates.
NodeId append_selection(CircuitBuilder& builder, const std::vector<NodeId>& inputs,
                        std::size_t k);

// Max-plus circuit for Sel^n_k, the sum of the k largest inputs.
Circuit selection_circuit(std::size_t n, std::size_t k);

// Row maxima y_a = max_b x_(a,b), then Sel^m_d over y. At most
// m(m-1) + 2dm <= 3m^2 gates.
Circuit design_approximator(const DesignSpec& spec);

// max(g, h) with g = sum_i max(x_i, x_{2m+i}) and h = sum_i max(x_{m+i},
// x_{3m+i}); 4m - 1 gates over n = 4m variables.
Circuit sidon_approximator(std::uint32_t m);

// Variables of the graph circuits below are the edges {i, j}, i < j, of K_n
// in lexicographic order. Vertices are 0-based.
std::size_t edge_count(std::size_t n);
std::size_t edge_index(std::size_t n, std::size_t i, std::size_t j);

// BF^1_j = x_{s,j}; BF^{l+1}_j = BF^l_j + sum_{i not in {s,j}} BF^l_i * x_{i,j};
// output BF^{n-1}_t. Tag must be Boolean or MinPlus.
Circuit bellman_ford_circuit(std::size_t n, std::size_t s, std::size_t t,
                             Semiring tag);

// D^k_{ij} = min(D^{k-1}_{ij}, D^{k-1}_{ik} + D^{k-1}_{kj}) over intermediate
// vertices k = 0, ..., n-1, built only for the cells D_{s,t} depends on.
Circuit floyd_warshall_circuit(std::size_t n, std::size_t s, std::size_t t);
// One circuit per pair i < j, all sharing a single node list.
std::vector<Circuit> floyd_warshall_all_pairs(std::size_t n);

// Boolean connectivity of an n-vertex graph: AND over j = 2..n of the
// Bellman-Ford circuits phi_{1,j}, which share their DP table.
Circuit spanning_tree_boolean(std::size_t n);

}  // namespace troplab

#endif  // TROPLAB_CONSTRUCTIONS_HPP_
