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

#ifndef TROPLAB_VECTORS_HPP_
#define TROPLAB_VECTORS_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "troplab/rational.hpp"

namespace troplab {

// Nonnegative integer vector: a monomial exponent or a multiplicity vector
// of a feasible solution.
using ExponentVector = std::vector<std::uint32_t>;

// Nonnegative rational weighting x of the n variables.
using Weighting = std::vector<Rational>;

struct VectorHash {
  std::size_t operator()(const ExponentVector& v) const;
};

ExponentVector unit_vector(std::size_t n, std::size_t i);
ExponentVector add(const ExponentVector& a, const ExponentVector& b);
// Componentwise a <= b.
bool leq(const ExponentVector& a, const ExponentVector& b);
bool is_zero(const ExponentVector& v);
bool is_zero_one(const ExponentVector& v);
// Sorted 0-based positions of the nonzero entries.
std::vector<std::size_t> support(const ExponentVector& v);
bool same_support(const ExponentVector& a, const ExponentVector& b);
// supp(a) is a subset of supp(b).
bool support_subset(const ExponentVector& a, const ExponentVector& b);
std::uint64_t weight(const ExponentVector& v);  // sum of entries
std::uint32_t max_entry(const ExponentVector& v);
Rational inner_product(const ExponentVector& b, const Weighting& x);
std::string to_string(const ExponentVector& v);

// Throws PreconditionError unless x has n entries, all nonnegative.
void check_weighting(const Weighting& x, std::size_t n);

// A finite set of equal-length exponent vectors, kept sorted
// lexicographically and free of duplicates.
class VectorSet {
 public:
  explicit VectorSet(std::size_t arity = 0) : arity_(arity) {}
  VectorSet(std::size_t arity, std::vector<ExponentVector> vectors);
  VectorSet(std::size_t arity, std::initializer_list<ExponentVector> vectors)
      : VectorSet(arity, std::vector<ExponentVector>(vectors)) {}

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const ExponentVector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<ExponentVector>& vectors() const { return vectors_; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  bool contains(const ExponentVector& v) const;
  // Position of v in the canonical order, or size() if absent.
  std::size_t index_of(const ExponentVector& v) const;
  bool is_subset_of(const VectorSet& other) const;
  bool is_zero_one() const;
  // No vector is componentwise below another.
  bool is_antichain() const;

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.arity_ == b.arity_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t arity_;
  std::vector<ExponentVector> vectors_;
};

VectorSet set_union(const VectorSet& a, const VectorSet& b);
// {x + y : x in a, y in b}. Throws ResourceError once the result would
// hold more than `limit` vectors.
VectorSet minkowski_sum(const VectorSet& a, const VectorSet& b,
                        std::size_t limit);
// Vectors of `set` that are minimal (or maximal) under componentwise order.
VectorSet minimal_elements(const VectorSet& set);
VectorSet maximal_elements(const VectorSet& set);

}  // namespace troplab

#endif  // TROPLAB_VECTORS_HPP_
