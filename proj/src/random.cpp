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


#include "troplab/random.hpp"

#include "troplab/error.hpp"

namespace troplab {

Circuit random_circuit(const RandomCircuitSpec& spec, std::mt19937_64& rng) {
  if (spec.num_vars == 0 || spec.gates == 0) {
    throw PreconditionError("random_circuit: need at least one variable and one gate");
  }
  CircuitBuilder b(spec.semiring, spec.num_vars);
  std::vector<NodeId> pool;
  for (std::size_t i = 0; i < spec.num_vars; ++i) pool.push_back(b.var(i));
  std::uniform_int_distribution<unsigned> percent(0, 99);
  const Rational constants[] = {Rational(0), Rational(1), Rational(2), Rational(3),
                                Rational(1, 2)};
  NodeId last = pool.front();
  for (std::size_t g = 0; g < spec.gates; ++g) {
    if (spec.constant_percent > 0 && percent(rng) < spec.constant_percent) {
      std::uniform_int_distribution<std::size_t> pick(0, std::size(constants) - 1);
      Rational v = constants[pick(rng)];
      if (spec.semiring == Semiring::Boolean && v > Rational(1)) v = Rational(1);
      if (spec.semiring == Semiring::Boolean && !v.is_integer()) v = Rational(0);
      pool.push_back(b.constant(v));
    }
    std::uniform_int_distribution<std::size_t> child(0, pool.size() - 1);
    const NodeId l = pool[child(rng)];
    const NodeId r = pool[child(rng)];
    last = percent(rng) < spec.mul_percent ? b.mul(l, r) : b.add(l, r);
    pool.push_back(last);
  }
  return b.build(last);
}

}  // namespace troplab
