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

#ifndef TROPLAB_CIRCUIT_HPP_
#define TROPLAB_CIRCUIT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "troplab/parallel.hpp"
#include "troplab/rational.hpp"
#include "troplab/vectors.hpp"

namespace troplab {

enum class Semiring { MinPlus, MaxPlus, Boolean, Arithmetic, Minkowski };

// "minplus", "maxplus", "boolean", "arithmetic", "minkowski".
std::string_view semiring_name(Semiring s);
std::optional<Semiring> parse_semiring(std::string_view name);
bool is_tropical(Semiring s);

enum class NodeKind { Var, Const, Add, Mul };

using NodeId = std::uint32_t;

// Var nodes hold a 0-based variable index; Const nodes a value; gates the
// ids of their two children (equal ids model parallel edges).
struct Node {
  NodeKind kind = NodeKind::Var;
  std::uint32_t var = 0;
  Rational value;
  NodeId left = 0;
  NodeId right = 0;

  bool is_gate() const { return kind == NodeKind::Add || kind == NodeKind::Mul; }
  friend bool operator==(const Node&, const Node&) = default;
};

// Fan-in-2 circuit stored as a topologically ordered node list. "Add" is
// the semiring addition (min, max, or, +, union) and "Mul" the semiring
// multiplication (+, +, and, *, Minkowski sum).
class Circuit {
 public:
  // Does not validate; see validate().
  Circuit(Semiring semiring, std::size_t num_vars, std::vector<Node> nodes,
          NodeId output);

  Semiring semiring() const { return semiring_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  NodeId output() const { return output_; }
  std::size_t gate_count() const;
  bool is_constant_free() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  Semiring semiring_;
  std::size_t num_vars_;
  std::vector<Node> nodes_;
  NodeId output_;
};

class CircuitBuilder {
 public:
  CircuitBuilder(Semiring semiring, std::size_t num_vars);

  // Variable inputs are created once and reused.
  NodeId var(std::size_t index);
  NodeId constant(const Rational& value);
  NodeId add(NodeId left, NodeId right);
  NodeId mul(NodeId left, NodeId right);
  // Left-fold over a nonempty list.
  NodeId add_all(const std::vector<NodeId>& ids);
  NodeId mul_all(const std::vector<NodeId>& ids);

  std::size_t gate_count() const { return gates_; }
  Circuit build(NodeId output) const;

 private:
  NodeId push(Node node);

  Semiring semiring_;
  std::size_t num_vars_;
  std::vector<Node> nodes_;
  std::vector<std::optional<NodeId>> var_nodes_;
  std::size_t gates_ = 0;
};

// Structural violations; empty iff the circuit is well formed.
std::vector<std::string> validate(const Circuit& c);
// Throws PreconditionError listing the violations, if any.
void require_valid(const Circuit& c);

// Value at x. Boolean circuits need 0-1 weightings and return 0 or 1.
Rational evaluate(const Circuit& c, const Weighting& x);
std::vector<Rational> evaluate_many(const Circuit& c,
                                    const std::vector<Weighting>& xs,
                                    Execution exec = Execution::Parallel);

inline constexpr std::size_t kDefaultProducedLimit = 1'000'000;

VectorSet produced_set(const Circuit& c,
                       std::size_t limit = kDefaultProducedLimit);
// Produced set at every node, indexed by node id.
std::vector<VectorSet> produced_sets(const Circuit& c,
                                     std::size_t limit = kDefaultProducedLimit);

// For a tropical circuit: exponent vector b -> additive constant c_b, so that
// the circuit computes min (or max) over b of <b,x> + c_b.
using TropicalPolynomial = std::map<ExponentVector, Rational>;
TropicalPolynomial tropical_polynomial(const Circuit& c,
                                       std::size_t limit = kDefaultProducedLimit);

// Same DAG under another semiring tag.
Circuit convert(const Circuit& c, Semiring target);

// Replaces constants by 0 and eliminates them with u+0 -> u, max(u,0) -> u,
// min(u,0) -> 0. Nodes that survive keep their relative order, so a
// constant-free circuit is returned unchanged. Throws
// DegenerateCircuitError when the output becomes the constant 0.
Circuit strip_constants(const Circuit& c);

// Inputs have degree 1, Add takes the max and Mul the sum.
Integer syntactic_degree(const Circuit& c);

}  // namespace troplab

#endif  // TROPLAB_CIRCUIT_HPP_
