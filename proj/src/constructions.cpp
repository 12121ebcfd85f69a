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

#include "troplab/constructions.hpp"

#include <map>
#include <optional>

#include "troplab/error.hpp"
#include "troplab/field.hpp"

namespace troplab {

NodeId append_selection(CircuitBuilder& builder, const std::vector<NodeId>& inputs,
                        std::size_t k) {
  const std::size_t n = inputs.size();
  if (k < 1 || k > n) throw PreconditionError("selection: need 1 <= k <= n");
  // cell[j][i]: Sel over the first j inputs, i of them chosen (1 <= i <= j).
  std::vector<std::vector<std::optional<NodeId>>> cell(
      n + 1, std::vector<std::optional<NodeId>>(k + 1));
  auto get = [&](auto&& self, std::size_t j, std::size_t i) -> NodeId {
    if (cell[j][i]) return *cell[j][i];
    NodeId id;
    if (j == 1) {
      id = inputs[0];
    } else if (i == j) {
      id = builder.mul(self(self, j - 1, i - 1), inputs[j - 1]);
    } else if (i == 1) {
      id = builder.add(self(self, j - 1, 1), inputs[j - 1]);
    } else {
      const NodeId skip = self(self, j - 1, i);
      const NodeId take = builder.mul(self(self, j - 1, i - 1), inputs[j - 1]);
      id = builder.add(skip, take);
    }
    cell[j][i] = id;
    return id;
  };
  return get(get, n, k);
}

Circuit selection_circuit(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw PreconditionError("selection_circuit: need 1 <= k <= n");
  CircuitBuilder b(Semiring::MaxPlus, n);
  std::vector<NodeId> inputs;
  for (std::size_t i = 0; i < n; ++i) inputs.push_back(b.var(i));
  return b.build(append_selection(b, inputs, k));
}

Circuit design_approximator(const DesignSpec& spec) {
  if (!FiniteField::supported_order(spec.m) || spec.m > kMaxDesignOrder) {
    throw PreconditionError("design_approximator: unsupported field order");
  }
  if (spec.d < 1 || spec.d > spec.m) {
    throw PreconditionError("design_approximator: need 1 <= d <= m");
  }
  const std::size_t m = spec.m;
  CircuitBuilder b(Semiring::MaxPlus, m * m);
  std::vector<NodeId> rows;
  for (std::uint32_t a = 0; a < m; ++a) {
    std::vector<NodeId> row;
    for (std::uint32_t v = 0; v < m; ++v) row.push_back(b.var(design_point(spec, a, v)));
    rows.push_back(b.add_all(row));
  }
  return b.build(append_selection(b, rows, spec.d));
}

Circuit sidon_approximator(std::uint32_t m) {
  if (m % 2 == 0 || m == 0) {
    throw PreconditionError("sidon_approximator: m must be odd");
  }
  CircuitBuilder b(Semiring::MaxPlus, 4 * static_cast<std::size_t>(m));
  auto block_sum = [&](std::size_t first, std::size_t second) {
    std::vector<NodeId> terms;
    for (std::size_t i = 0; i < m; ++i) {
      terms.push_back(b.add(b.var(first * m + i), b.var(second * m + i)));
    }
    return b.mul_all(terms);
  };
  const NodeId g = block_sum(0, 2);
  const NodeId h = block_sum(1, 3);
  return b.build(b.add(g, h));
}

std::size_t edge_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t edge_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j || i >= n || j >= n) throw PreconditionError("edge_index: bad edge");
  if (i > j) std::swap(i, j);
  // Edges {a, *} for a < i come first, n - 1 - a of them each.
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

namespace {

void check_pair(std::size_t n, std::size_t s, std::size_t t) {
  if (n < 2) throw PreconditionError("graph circuits need n >= 2");
  if (s >= n || t >= n || s == t) {
    throw PreconditionError("graph circuits need distinct vertices s, t < n");
  }
}

// Memoized Bellman-Ford table BF^l_j for a fixed source.
class BellmanFordTable {
 public:
  BellmanFordTable(CircuitBuilder& b, std::size_t n, std::size_t s)
      : b_(b), n_(n), s_(s), memo_(n, std::vector<std::optional<NodeId>>(n)) {}

  NodeId get(std::size_t l, std::size_t j) {
    if (memo_[l][j]) return *memo_[l][j];
    NodeId id;
    if (l == 1) {
      id = b_.var(edge_index(n_, s_, j));
    } else {
      std::vector<NodeId> terms{get(l - 1, j)};
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == s_ || i == j) continue;
        terms.push_back(b_.mul(get(l - 1, i), b_.var(edge_index(n_, i, j))));
      }
      id = b_.add_all(terms);
    }
    memo_[l][j] = id;
    return id;
  }

 private:
  CircuitBuilder& b_;
  std::size_t n_;
  std::size_t s_;
  std::vector<std::vector<std::optional<NodeId>>> memo_;
};

class FloydWarshallTable {
 public:
  FloydWarshallTable(CircuitBuilder& b, std::size_t n) : b_(b), n_(n) {}

  // D^k_{ij}: shortest i-j path with intermediate vertices among 0..k-1.
  NodeId get(std::size_t k, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    const auto key = std::make_tuple(k, i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    NodeId id;
    if (k == 0) {
      id = b_.var(edge_index(n_, i, j));
    } else {
      const std::size_t via = k - 1;
      if (via == i || via == j) {
        id = get(k - 1, i, j);
      } else {
        id = b_.add(get(k - 1, i, j), b_.mul(get(k - 1, i, via), get(k - 1, via, j)));
      }
    }
    memo_.emplace(key, id);
    return id;
  }

 private:
  CircuitBuilder& b_;
  std::size_t n_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, NodeId> memo_;
};

}  // namespace

Circuit bellman_ford_circuit(std::size_t n, std::size_t s, std::size_t t,
                             Semiring tag) {
  check_pair(n, s, t);
  if (tag != Semiring::Boolean && tag != Semiring::MinPlus) {
    throw PreconditionError("bellman_ford_circuit: tag must be boolean or minplus");
  }
  CircuitBuilder b(tag, edge_count(n));
  BellmanFordTable table(b, n, s);
  return b.build(table.get(n - 1, t));
}

Circuit floyd_warshall_circuit(std::size_t n, std::size_t s, std::size_t t) {
  check_pair(n, s, t);
  CircuitBuilder b(Semiring::MinPlus, edge_count(n));
  FloydWarshallTable table(b, n);
  return b.build(table.get(n, s, t));
}

std::vector<Circuit> floyd_warshall_all_pairs(std::size_t n) {
  if (n < 2) throw PreconditionError("graph circuits need n >= 2");
  CircuitBuilder b(Semiring::MinPlus, edge_count(n));
  FloydWarshallTable table(b, n);
  std::vector<NodeId> outputs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) outputs.push_back(table.get(n, i, j));
  }
  std::vector<Circuit> out;
  for (auto id : outputs) out.push_back(b.build(id));
  return out;
}

Circuit spanning_tree_boolean(std::size_t n) {
  if (n < 2) throw PreconditionError("spanning_tree_boolean: need n >= 2");
  CircuitBuilder b(Semiring::Boolean, edge_count(n));
  BellmanFordTable table(b, n, 0);
  std::vector<NodeId> reach;
  for (std::size_t j = 1; j < n; ++j) reach.push_back(table.get(n - 1, j));
  return b.build(b.mul_all(reach));
}

}  // namespace troplab
