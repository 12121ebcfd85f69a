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


#ifndef TROPLAB_IO_HPP_
#define TROPLAB_IO_HPP_

#include <string>
#include <string_view>

#include "troplab/circuit.hpp"
#include "troplab/family.hpp"
#include "troplab/vectors.hpp"

namespace troplab {

// Line-oriented text formats. '#' starts a comment; blank lines are
// ignored. Variable and element indices in files are 1-based.
//
//   circuit <minplus|maxplus|boolean|arithmetic|minkowski> vars=<n>
//   <id> = var <i> | const <p>/<q> | add <id> <id> | mul <id> <id>
//   output <id>
//
//   family vars=<n>       one set per line, ascending indices
//   weights vars=<n>      n rationals
//   vectors vars=<n>      one vector of n integers per line
//
// Parsers throw PreconditionError naming the offending line. Circuit
// parsing checks syntax and ids only; structural checks are in validate().

Circuit parse_circuit(std::string_view text);
std::string serialize(const Circuit& c);

SetFamily parse_family(std::string_view text);
std::string serialize(const SetFamily& f);

Weighting parse_weighting(std::string_view text);
std::string serialize_weighting(const Weighting& x);

VectorSet parse_vectors(std::string_view text);
std::string serialize(const VectorSet& v);

// Inline vector such as "1,0,2" or "1 0 2".
ExponentVector parse_vector(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace troplab

#endif  // TROPLAB_IO_HPP_
