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


#ifndef TROPLAB_RANDOM_HPP_
#define TROPLAB_RANDOM_HPP_

#include <cstddef>
#include <random>

#include "troplab/circuit.hpp"

namespace troplab {

struct RandomCircuitSpec {
  Semiring semiring = Semiring::MaxPlus;
  std::size_t num_vars = 4;
  std::size_t gates = 8;  // exact number of gates
  // Probability (in percent) that a new input node is a constant rather
  // than a variable. Constants are drawn from {0, 1, 2, 3, 1/2}.
  unsigned constant_percent = 0;
  unsigned mul_percent = 45;
};

// Random fan-in-2 circuit whose output is the last gate. Every variable
// gets an input node; gates pick children uniformly among earlier nodes.
Circuit random_circuit(const RandomCircuitSpec& spec, std::mt19937_64& rng);

}  // namespace troplab

#endif  // TROPLAB_RANDOM_HPP_
