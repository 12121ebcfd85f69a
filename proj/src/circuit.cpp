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

#include "troplab/circuit.hpp"

#include <algorithm>

#include "troplab/error.hpp"

namespace troplab {
namespace {

std::string gate_name(NodeId id) { return "g" + std::to_string(id); }

}  // namespace

std::string_view semiring_name(Semiring s) {
  switch (s) {
    case Semiring::MinPlus: return "minplus";
    case Semiring::MaxPlus: return "maxplus";
    case Semiring::Boolean: return "boolean";
    case Semiring::Arithmetic: return "arithmetic";
    case Semiring::Minkowski: return "minkowski";
  }
  return "?";
}

std::optional<Semiring> parse_semiring(std::string_view name) {
  for (auto s : {Semiring::MinPlus, Semiring::MaxPlus, Semiring::Boolean,
                 Semiring::Arithmetic, Semiring::Minkowski}) {
    if (semiring_name(s) == name) return s;
  }
  return std::nullopt;
}

bool is_tropical(Semiring s) {
  return s == Semiring::MinPlus || s == Semiring::MaxPlus;
}

Circuit::Circuit(Semiring semiring, std::size_t num_vars,
                 std::vector<Node> nodes, NodeId output)
    : semiring_(semiring),
      num_vars_(num_vars),
      nodes_(std::move(nodes)),
      output_(output) {}

std::size_t Circuit::gate_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_gate(); }));
}

bool Circuit::is_constant_free() const {
  return std::none_of(nodes_.begin(), nodes_.end(), [](const Node& n) {
    return n.kind == NodeKind::Const;
  });
}

CircuitBuilder::CircuitBuilder(Semiring semiring, std::size_t num_vars)
    : semiring_(semiring), num_vars_(num_vars), var_nodes_(num_vars) {}

NodeId CircuitBuilder::push(Node node) {
  nodes_.push_back(std::move(node));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CircuitBuilder::var(std::size_t index) {
  if (index >= num_vars_) {
    throw PreconditionError("variable index " + std::to_string(index + 1) +
                            " out of range");
  }
  if (!var_nodes_[index]) {
    Node n;
    n.kind = NodeKind::Var;
    n.var = static_cast<std::uint32_t>(index);
    var_nodes_[index] = push(std::move(n));
  }
  return *var_nodes_[index];
}

NodeId CircuitBuilder::constant(const Rational& value) {
  Node n;
  n.kind = NodeKind::Const;
  n.value = value;
  return push(std::move(n));
}

NodeId CircuitBuilder::add(NodeId left, NodeId right) {
  if (left >= nodes_.size() || right >= nodes_.size()) {
    throw PreconditionError("builder: unknown child node");
  }
  Node n;
  n.kind = NodeKind::Add;
  n.left = left;
  n.right = right;
  ++gates_;
  return push(std::move(n));
}

NodeId CircuitBuilder::mul(NodeId left, NodeId right) {
  if (left >= nodes_.size() || right >= nodes_.size()) {
    throw PreconditionError("builder: unknown child node");
  }
  Node n;
  n.kind = NodeKind::Mul;
  n.left = left;
  n.right = right;
  ++gates_;
  return push(std::move(n));
}

NodeId CircuitBuilder::add_all(const std::vector<NodeId>& ids) {
  if (ids.empty()) throw PreconditionError("builder: empty addition");
  NodeId acc = ids.front();
  for (std::size_t i = 1; i < ids.size(); ++i) acc = add(acc, ids[i]);
  return acc;
}

NodeId CircuitBuilder::mul_all(const std::vector<NodeId>& ids) {
  if (ids.empty()) throw PreconditionError("builder: empty product");
  NodeId acc = ids.front();
  for (std::size_t i = 1; i < ids.size(); ++i) acc = mul(acc, ids[i]);
  return acc;
}

Circuit CircuitBuilder::build(NodeId output) const {
  if (output >= nodes_.size()) throw PreconditionError("builder: unknown output");
  return Circuit(semiring_, num_vars_, nodes_, output);
}

std::vector<std::string> validate(const Circuit& c) {
  std::vector<std::string> out;
  const auto& nodes = c.nodes();
  if (nodes.empty()) out.push_back("circuit has no nodes");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Node& n = nodes[k];
    const auto id = static_cast<NodeId>(k);
    switch (n.kind) {
      case NodeKind::Var:
        if (n.var >= c.num_vars()) {
          out.push_back(gate_name(id) + ": variable " + std::to_string(n.var + 1) +
                        " outside 1.." + std::to_string(c.num_vars()));
        }
        break;
      case NodeKind::Const:
        if (c.semiring() == Semiring::Boolean && n.value != Rational(0) &&
            n.value != Rational(1)) {
          out.push_back("constant outside {0,1}");
        } else if (n.value.sign() < 0) {
          out.push_back(gate_name(id) + ": negative constant");
        }
        break;
      case NodeKind::Add:
      case NodeKind::Mul:
        for (NodeId child : {n.left, n.right}) {
          if (child >= k) out.push_back("unknown node " + gate_name(child));
        }
        break;
    }
  }
  if (c.output() >= nodes.size()) {
    out.push_back("unknown node " + gate_name(c.output()));
  }
  return out;
}

void require_valid(const Circuit& c) {
  const auto violations = validate(c);
  if (violations.empty()) return;
  std::string msg = "invalid circuit:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw PreconditionError(msg);
}

Rational evaluate(const Circuit& c, const Weighting& x) {
  require_valid(c);
  check_weighting(x, c.num_vars());
  const Semiring s = c.semiring();
  if (s == Semiring::Minkowski) {
    throw PreconditionError("evaluate: Minkowski circuits have no scalar value");
  }
  if (s == Semiring::Boolean) {
    for (const auto& v : x) {
      if (v != Rational(0) && v != Rational(1)) {
        throw PreconditionError("evaluate: boolean circuit needs a 0-1 input");
      }
    }
  }
  std::vector<Rational> val(c.nodes().size());
  for (std::size_t k = 0; k < c.nodes().size(); ++k) {
    const Node& n = c.nodes()[k];
    switch (n.kind) {
      case NodeKind::Var: val[k] = x[n.var]; break;
      case NodeKind::Const: val[k] = n.value; break;
      case NodeKind::Add: {
        const Rational& a = val[n.left];
        const Rational& b = val[n.right];
        switch (s) {
          case Semiring::MinPlus: val[k] = min(a, b); break;
          case Semiring::MaxPlus:
          case Semiring::Boolean: val[k] = max(a, b); break;
          default: val[k] = a + b; break;
        }
        break;
      }
      case NodeKind::Mul: {
        const Rational& a = val[n.left];
        const Rational& b = val[n.right];
        if (s == Semiring::Boolean) {
          val[k] = min(a, b);
        } else if (s == Semiring::Arithmetic) {
          val[k] = a * b;
        } else {
          val[k] = a + b;
        }
        break;
      }
    }
  }
  return val[c.output()];
}

std::vector<Rational> evaluate_many(const Circuit& c,
                                    const std::vector<Weighting>& xs,
                                    Execution exec) {
  std::vector<Rational> out(xs.size());
  for_each_index(xs.size(), exec,
                 [&](std::size_t i) { out[i] = evaluate(c, xs[i]); });
  return out;
}

std::vector<VectorSet> produced_sets(const Circuit& c, std::size_t limit) {
  require_valid(c);
  const std::size_t n = c.num_vars();
  std::vector<VectorSet> sets;
  sets.reserve(c.nodes().size());
  for (std::size_t k = 0; k < c.nodes().size(); ++k) {
    const Node& node = c.nodes()[k];
    switch (node.kind) {
      case NodeKind::Var:
        sets.emplace_back(n, std::vector<ExponentVector>{unit_vector(n, node.var)});
        break;
      case NodeKind::Const:
        sets.emplace_back(n, std::vector<ExponentVector>{ExponentVector(n, 0)});
        break;
      case NodeKind::Add:
        sets.push_back(set_union(sets[node.left], sets[node.right]));
        if (sets.back().size() > limit) {
          throw ResourceError("produced set at gate " +
                              gate_name(static_cast<NodeId>(k)) + " exceeds " +
                              std::to_string(limit) + " vectors");
        }
        break;
      case NodeKind::Mul:
        try {
          sets.push_back(minkowski_sum(sets[node.left], sets[node.right], limit));
        } catch (const ResourceError&) {
          throw ResourceError("produced set at gate " +
                              gate_name(static_cast<NodeId>(k)) + " exceeds " +
                              std::to_string(limit) + " vectors");
        }
        break;
    }
  }
  return sets;
}

VectorSet produced_set(const Circuit& c, std::size_t limit) {
  require_valid(c);
  // Only the sets reachable from the output are materialized.
  const auto& nodes = c.nodes();
  std::vector<bool> live(nodes.size(), false);
  live[c.output()] = true;
  for (std::size_t k = nodes.size(); k-- > 0;) {
    if (live[k] && nodes[k].is_gate()) {
      live[nodes[k].left] = true;
      live[nodes[k].right] = true;
    }
  }
  std::vector<Node> kept;
  std::vector<NodeId> remap(nodes.size(), 0);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!live[k]) continue;
    Node node = nodes[k];
    if (node.is_gate()) {
      node.left = remap[node.left];
      node.right = remap[node.right];
    }
    remap[k] = static_cast<NodeId>(kept.size());
    kept.push_back(std::move(node));
  }
  Circuit pruned(c.semiring(), c.num_vars(), std::move(kept), remap[c.output()]);
  auto sets = produced_sets(pruned, limit);
  return std::move(sets[pruned.output()]);
}

TropicalPolynomial tropical_polynomial(const Circuit& c, std::size_t limit) {
  require_valid(c);
  if (!is_tropical(c.semiring())) {
    throw PreconditionError("tropical_polynomial: circuit is not tropical");
  }
  const bool is_min = c.semiring() == Semiring::MinPlus;
  const std::size_t n = c.num_vars();
  auto better = [is_min](const Rational& a, const Rational& b) {
    return is_min ? a < b : a > b;
  };
  auto merge = [&](TropicalPolynomial& into, const ExponentVector& b,
                   const Rational& offset) {
    auto [it, inserted] = into.emplace(b, offset);
    if (!inserted && better(offset, it->second)) it->second = offset;
  };
  std::vector<TropicalPolynomial> polys(c.nodes().size());
  for (std::size_t k = 0; k < c.nodes().size(); ++k) {
    const Node& node = c.nodes()[k];
    auto& out = polys[k];
    switch (node.kind) {
      case NodeKind::Var: out.emplace(unit_vector(n, node.var), Rational(0)); break;
      case NodeKind::Const: out.emplace(ExponentVector(n, 0), node.value); break;
      case NodeKind::Add:
        out = polys[node.left];
        for (const auto& [b, off] : polys[node.right]) merge(out, b, off);
        break;
      case NodeKind::Mul:
        for (const auto& [b1, o1] : polys[node.left]) {
          for (const auto& [b2, o2] : polys[node.right]) {
            merge(out, add(b1, b2), o1 + o2);
          }
        }
        break;
    }
    if (out.size() > limit) {
      throw ResourceError("produced set at gate " +
                          gate_name(static_cast<NodeId>(k)) + " exceeds " +
                          std::to_string(limit) + " vectors");
    }
  }
  return polys[c.output()];
}

Circuit convert(const Circuit& c, Semiring target) {
  if (target == Semiring::Boolean) {
    for (const auto& node : c.nodes()) {
      if (node.kind == NodeKind::Const && node.value != Rational(0) &&
          node.value != Rational(1)) {
        throw PreconditionError("convert: constant " + node.value.to_string() +
                                " has no boolean counterpart");
      }
    }
  }
  return Circuit(target, c.num_vars(), c.nodes(), c.output());
}

Circuit strip_constants(const Circuit& c) {
  require_valid(c);
  if (!is_tropical(c.semiring())) {
    throw PreconditionError("strip_constants: circuit is not tropical");
  }
  const bool is_min = c.semiring() == Semiring::MinPlus;
  const auto& nodes = c.nodes();
  constexpr NodeId kZero = static_cast<NodeId>(-1);
  // mapped[k]: id of the node in the result that node k reduces to, or kZero.
  std::vector<NodeId> mapped(nodes.size(), kZero);
  std::vector<Node> out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Node node = nodes[k];
    if (node.kind == NodeKind::Const) continue;
    if (node.kind == NodeKind::Var) {
      mapped[k] = static_cast<NodeId>(out.size());
      out.push_back(node);
      continue;
    }
    const NodeId l = mapped[node.left];
    const NodeId r = mapped[node.right];
    if (l == kZero || r == kZero) {
      if (node.kind == NodeKind::Add && is_min) continue;  // min(u,0) -> 0
      mapped[k] = (l == kZero) ? r : l;  // u+0 -> u, max(u,0) -> u
      continue;
    }
    node.left = l;
    node.right = r;
    mapped[k] = static_cast<NodeId>(out.size());
    out.push_back(node);
  }
  if (mapped[c.output()] == kZero) {
    throw DegenerateCircuitError(
        "strip_constants: circuit collapses to the constant 0");
  }
  return Circuit(c.semiring(), c.num_vars(), std::move(out), mapped[c.output()]);
}

Integer syntactic_degree(const Circuit& c) {
  require_valid(c);
  std::vector<Integer> deg(c.nodes().size());
  for (std::size_t k = 0; k < c.nodes().size(); ++k) {
    const Node& node = c.nodes()[k];
    switch (node.kind) {
      case NodeKind::Var:
      case NodeKind::Const: deg[k] = 1; break;
      case NodeKind::Add: deg[k] = std::max(deg[node.left], deg[node.right]); break;
      case NodeKind::Mul: deg[k] = deg[node.left] + deg[node.right]; break;
    }
  }
  return deg[c.output()];
}

}  // namespace troplab
