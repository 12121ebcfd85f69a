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

#ifndef TROPLAB_FAMILY_HPP_
#define TROPLAB_FAMILY_HPP_

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "troplab/circuit.hpp"
#include "troplab/parallel.hpp"
#include "troplab/rational.hpp"
#include "troplab/vectors.hpp"

namespace troplab {

enum class Sense { Min, Max };

using ElementSet = boost::dynamic_bitset<>;

// Lexicographic order of the ascending element lists.
bool canonical_less(const ElementSet& a, const ElementSet& b);
std::vector<std::size_t> elements_of(const ElementSet& s);

// Family of nonempty subsets of the ground set {0, ..., n-1} (printed
// 1-based), deduplicated and kept in canonical order.
class SetFamily {
 public:
  explicit SetFamily(std::size_t ground_size = 0) : n_(ground_size) {}
  // Element indices are 0-based. Throws on empty sets or out-of-range indices.
  SetFamily(std::size_t ground_size,
            const std::vector<std::vector<std::size_t>>& sets);
  SetFamily(std::size_t ground_size, std::vector<ElementSet> sets);

  std::size_t ground_size() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const ElementSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  std::vector<std::size_t> elements(std::size_t i) const {
    return elements_of(sets_[i]);
  }
  bool contains(const ElementSet& s) const;
  // Some member contains s.
  bool has_superset_of(const ElementSet& s) const;
  // Some member is contained in s.
  bool has_subset_of(const ElementSet& s) const;

  std::optional<std::size_t> uniform_size() const;
  std::size_t max_set_size() const;

  VectorSet characteristic_vectors() const;
  // Requires a 0-1 vector set without the zero vector.
  static SetFamily from_vectors(const VectorSet& vectors);

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }

 private:
  std::size_t n_;
  std::vector<ElementSet> sets_;
};

ElementSet make_set(std::size_t n, const std::vector<std::size_t>& elements);
ExponentVector characteristic_vector(const ElementSet& s);

// All m-element subsets of an n-element ground set.
SetFamily all_subsets_of_size(std::size_t n, std::size_t m);
// Members of `universe` that are not in `removed`.
SetFamily family_difference(const SetFamily& universe, const SetFamily& removed);

Rational set_weight(const ElementSet& s, const Weighting& x);
Rational optimum(const SetFamily& f, const Weighting& x, Sense sense);

bool is_antichain(const SetFamily& f);
bool is_uniform(const SetFamily& f, std::size_t m);
// Distinct members share fewer than d elements.
bool is_d_disjoint(const SetFamily& f, std::size_t d);
// Distinct members have symmetric difference larger than 2.
bool is_separated(const SetFamily& f);

inline constexpr std::size_t kMaxDenseGround = 24;
// Every k-subset of the ground set lies in some member. Ground sets larger
// than kMaxDenseGround raise ResourceError.
bool is_k_dense(const SetFamily& f, std::size_t k,
                Execution exec = Execution::Parallel);

struct ExchangeWitness {
  std::size_t a_set;  // index of A in the family
  std::size_t b_set;  // index of B
  std::size_t element;  // a in A \ B with no valid replacement in B \ A
};

struct MatroidReport {
  bool is_matroid = false;
  std::optional<ExchangeWitness> witness;
};

// Basis exchange axiom over all pairs. The family must be uniform.
MatroidReport matroid_check(const SetFamily& f);

inline constexpr std::size_t kMaxSidonSize = 128;
// a + b = c + d implies {a, b} = {c, d}.
bool is_sidon(const VectorSet& a);

struct PredicateParams {
  std::optional<std::size_t> m;  // uniformity
  std::optional<std::size_t> k;  // denseness
  std::optional<std::size_t> d;  // disjointness
};

struct FamilyPredicates {
  bool is_antichain = false;
  std::optional<std::size_t> uniform_size;
  std::optional<bool> is_uniform;
  std::optional<bool> is_k_dense;
  std::optional<bool> is_d_disjoint;
  bool is_separated = false;
  bool is_sidon = false;  // of the characteristic vectors
  std::optional<MatroidReport> matroid;  // only for uniform families
};

FamilyPredicates predicates(const SetFamily& f, const PredicateParams& params);

// Every support in B contains a support in A and vice versa.
bool similar(const VectorSet& a, const VectorSet& b);

inline constexpr std::size_t kMaxTableArity = 20;

// Truth table of a boolean function of n <= 20 variables; bit `mask` holds
// the value at the input whose ones are the bits of mask.
class BooleanTable {
 public:
  explicit BooleanTable(std::size_t arity);
  std::size_t arity() const { return arity_; }
  bool at(std::uint32_t mask) const { return bits_[mask]; }
  void set(std::uint32_t mask, bool value) { bits_[mask] = value; }
  bool is_monotone() const;
  const boost::dynamic_bitset<>& bits() const { return bits_; }
  friend bool operator==(const BooleanTable& a, const BooleanTable& b) {
    return a.arity_ == b.arity_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t arity_;
  boost::dynamic_bitset<> bits_;
};

// f_A(x) = 1 iff supp(x) contains supp(a) for some a in A.
BooleanTable boolean_function_of(const VectorSet& a);
// Truth table of a circuit read as a boolean circuit (constants 0/1).
BooleanTable boolean_table(const Circuit& c);

// Fraction of random families F of (n/2)-subsets of [n] (each included with
// probability 1/2) that are (n/2 - 2)-dense.
Rational kdense_sampling_experiment(std::size_t n, std::size_t trials,
                                    std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

}  // namespace troplab

#endif  // TROPLAB_FAMILY_HPP_
