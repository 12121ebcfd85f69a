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

#ifndef TROPLAB_ERROR_HPP_
#define TROPLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace troplab {

// Base of every error raised by the library. The CLI maps the subclasses
// onto its exit codes: precondition/usage -> 1, resource guard -> 2,
// invariant failure -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (bad arity, negative weight,
// factor below 1, division by zero, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A tropical circuit whose constant elimination leaves only the constant 0.
class DegenerateCircuitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A configurable size guard was exceeded (produced-set size, family size,
// enumeration limits).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Something that must hold by construction did not. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace troplab

#endif  // TROPLAB_ERROR_HPP_
