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

namespace troplab {
namespace {

TEST(Selection, Examples) {
  EXPECT_EQ(evaluate(selection_circuit(4, 2), Weighting{5, 1, 7, 2}), Rational(12));
  oracle::Gen gen(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Circuit top = selection_circuit(n, 1);
    const Circuit all = selection_circuit(n, n);
    std::vector<ExponentVector> units;
    for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));
    EXPECT_EQ(produced_set(top), VectorSet(n, units));
    EXPECT_EQ(produced_set(all), VectorSet(n, {ExponentVector(n, 1)}));
    for (int t = 0; t < 20; ++t) {
      const Weighting x = gen.weighting(n);
      EXPECT_EQ(evaluate(top, x), *std::max_element(x.begin(), x.end()));
    }
  }
  EXPECT_THROW(selection_circuit(3, 0), PreconditionError);
  EXPECT_THROW(selection_circuit(3, 4), PreconditionError);
}

TEST(Selection, MatchesSortOracleWithinGateBound) {
  oracle::Gen gen(2);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Circuit c = selection_circuit(n, k);
      ASSERT_LE(c.gate_count(), 2 * k * n);
      std::vector<Weighting> xs;
      for (int t = 0; t < 1000; ++t) xs.push_back(gen.weighting(n));
      const auto values = evaluate_many(c, xs);
      for (std::size_t t = 0; t < xs.size(); ++t) {
        ASSERT_EQ(values[t], oracle::top_k_sum(xs[t], k)) << n << ' ' << k;
      }
    }
  }
}

TEST(Selection, ApproximatesEveryDenseUniformFamily) {
  std::size_t checked = 0;
  for (const auto& nf : corpus::families()) {
    const auto m = nf.family.uniform_size();
    if (!m || nf.family.ground_size() > 12) continue;
    for (std::size_t k = 1; k <= *m; ++k) {
      if (!is_k_dense(nf.family, k)) continue;
      const Circuit sel = selection_circuit(nf.family.ground_size(), k);
      EXPECT_TRUE(certify_max(sel, nf.family.characteristic_vectors(), Rational(*m, k)).verdict)
          << nf.name << " k=" << k;
      ++checked;
    }
  }
  EXPECT_GT(checked, 5u);
}

TEST(DesignApproximator, Examples) {
  for (std::uint32_t m : {2u, 3u, 4u, 5u}) {
    for (std::uint32_t d = 1; d <= m; ++d) {
      ASSERT_LE(design_approximator({m, d}).gate_count(), 3u * m * m);
    }
  }
  EXPECT_LE(design_approximator({5, 2}).gate_count(), 75u);
  const SetFamily f = polynomial_design({3, 3});
  const Circuit c = design_approximator({3, 3});
  for (const auto& s : f) {
    Weighting x(9, Rational(0));
    for (std::size_t e : elements_of(s)) x[e] = Rational(1);
    EXPECT_EQ(evaluate(c, x), Rational(3));
  }
  const Circuit c31 = design_approximator({3, 1});
  EXPECT_TRUE(certify_max(c31, polynomial_design({3, 1}).characteristic_vectors(), Rational(3)).verdict);
}

TEST(SidonApproximator, Examples) {
  for (std::uint32_t m : {3u, 5u, 7u}) {
    const Circuit c = sidon_approximator(m);
    EXPECT_EQ(c.num_vars(), 4u * m);
    EXPECT_LE(c.gate_count(), 4u * m);
    for (const auto& v : sidon_cubic(m)) {
      Weighting x;
      for (auto e : v) x.emplace_back(e);
      EXPECT_GE(evaluate(c, x), Rational(m));
    }
  }
  EXPECT_TRUE(certify_max(sidon_approximator(3), sidon_cubic(3), Rational(2)).verdict);
  EXPECT_THROW(sidon_approximator(4), PreconditionError);
}

TEST(GraphCircuits, EdgeIndexing) {
  EXPECT_EQ(edge_count(4), 6u);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ASSERT_EQ(edge_index(n, i, j), oracle::edge_id(n, i, j));
        ASSERT_EQ(edge_index(n, j, i), oracle::edge_id(n, i, j));
      }
    }
  }
}

TEST(GraphCircuits, BellmanFordBooleanIsConnectivity) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::size_t e = edge_count(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        const Circuit c = bellman_ford_circuit(n, s, t, Semiring::Boolean);
        ASSERT_LE(c.gate_count(), 2 * n * n * n);
        const BooleanTable table = boolean_table(c);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
          ASSERT_EQ(table.at(static_cast<std::uint32_t>(mask)), oracle::connected(n, mask, s, t));
        }
      }
    }
  }
  EXPECT_THROW(bellman_ford_circuit(3, 1, 1, Semiring::Boolean), PreconditionError);
  EXPECT_THROW(bellman_ford_circuit(3, 0, 1, Semiring::MaxPlus), PreconditionError);
}

TEST(GraphCircuits, ShortestPathsAgree) {
  oracle::Gen gen(3);
  for (std::size_t n = 2; n <= 6; ++n) {
    const Circuit bf = bellman_ford_circuit(n, 0, n - 1, Semiring::MinPlus);
    const Circuit fw = floyd_warshall_circuit(n, 0, n - 1);
    ASSERT_LE(fw.gate_count(), 2 * n * n * n);
    for (int t = 0; t < 100; ++t) {
      const Weighting x = gen.weighting(edge_count(n));
      const Rational expected = oracle::shortest_path(n, 0, n - 1, x);
      ASSERT_EQ(evaluate(bf, x), expected);
      ASSERT_EQ(evaluate(fw, x), expected);
    }
    const Weighting unit(edge_count(n), Rational(1));
    EXPECT_EQ(evaluate(bf, unit), Rational(1));
    EXPECT_EQ(evaluate(fw, unit), Rational(1));
  }
}

TEST(GraphCircuits, WalksLieAbovePaths) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const VectorSet paths = oracle::simple_paths(n, 0, n - 1);
    for (const Circuit& c : {floyd_warshall_circuit(n, 0, n - 1),
                             bellman_ford_circuit(n, 0, n - 1, Semiring::MinPlus)}) {
      const VectorSet produced = produced_set(c);
      for (const auto& b : produced) {
        bool above = false;
        for (const auto& p : paths) above = above || leq(p, b);
        ASSERT_TRUE(above);
      }
      ASSERT_TRUE(paths.is_subset_of(produced));
    }
  }
}

TEST(GraphCircuits, AllPairsShareStructure) {
  oracle::Gen gen(4);
  const std::size_t n = 5;
  const auto circuits = floyd_warshall_all_pairs(n);
  ASSERT_EQ(circuits.size(), n * (n - 1) / 2);
  const Weighting x = gen.weighting(edge_count(n));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++idx) {
      EXPECT_EQ(evaluate(circuits[idx], x), oracle::shortest_path(n, i, j, x));
    }
  }
}

TEST(GraphCircuits, SpanningTreeIsGraphConnectivity) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Circuit c = spanning_tree_boolean(n);
    EXPECT_LE(syntactic_degree(c), static_cast<std::int64_t>((n - 1) * (n - 1)));
    EXPECT_LE(c.gate_count(), 2 * n * n * n + n);
    const BooleanTable table = boolean_table(c);
    std::size_t accepted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edge_count(n)); ++mask) {
      const bool conn = oracle::connected_graph(n, mask);
      ASSERT_EQ(table.at(static_cast<std::uint32_t>(mask)), conn);
      accepted += conn;
    }
    if (n == 3) EXPECT_EQ(accepted, 4u);
    EXPECT_FALSE(table.at(0));
  }
}

}  // namespace
}  // namespace troplab
