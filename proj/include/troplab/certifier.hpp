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

#ifndef TROPLAB_CERTIFIER_HPP_
#define TROPLAB_CERTIFIER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "troplab/circuit.hpp"
#include "troplab/family.hpp"
#include "troplab/lp.hpp"
#include "troplab/parallel.hpp"
#include "troplab/rational.hpp"
#include "troplab/vectors.hpp"

namespace troplab {

enum class CheckKind {
  // max: b below conv(A); min: b above conv(A) (above A for 0-1 antichains)
  Validity,
  // max: (1/r) a below conv(B); min: r a (tightly) above conv(B0)
  Coverage,
};

struct VectorCheck {
  CheckKind kind = CheckKind::Validity;
  ExponentVector subject;  // b for validity checks, a for coverage checks
  bool tight = false;
  Certificate certificate;
};

// Verdict of certify_max / certify_min with one certificate per vector.
// The circuit computes opt over b of <b,x> + c_b; B holds every produced b
// and B0 those with c_b = 0 (B0 = B for constant-free circuits). Validity
// certificates index into A, coverage certificates into B (max) or B0 (min).
struct CertificateBundle {
  bool verdict = false;
  Sense sense = Sense::Max;
  Rational factor;
  bool antichain_mode = false;
  VectorSet a;
  VectorSet b;
  VectorSet b_zero;
  std::vector<VectorCheck> validity;
  std::vector<VectorCheck> coverage;
  std::string note;
};

// Rebuilds the dominance query a check was decided from.
DominanceQuery query_for(const CertificateBundle& bundle, const VectorCheck& check);

struct CertifyOptions {
  std::size_t produced_limit = kDefaultProducedLimit;
  Execution exec = Execution::Parallel;
};

// Does the max-plus circuit r-approximate the maximization problem on A?
// True iff all offsets c_b vanish, B lies below conv(A), and (1/r) A lies
// below conv(B).
CertificateBundle certify_max(const Circuit& c, const VectorSet& a,
                              const Rational& r, const CertifyOptions& opt = {});

// Does the min-plus circuit r-approximate the minimization problem on A?
// True iff B lies above conv(A) and r A lies above conv(B0). For 0-1
// antichains the equivalent form "B above A, r A tightly above conv(B0)"
// is checked.
CertificateBundle certify_min(const Circuit& c, const VectorSet& a,
                              const Rational& r, const CertifyOptions& opt = {});

struct FactorResult {
  enum class Kind { Finite, Infinite, Invalid };
  Kind kind = Kind::Invalid;
  Rational value;  // meaningful for Finite
  // The vector of A attaining the factor (Finite), or the offending vector.
  std::optional<ExponentVector> witness;
  std::string note;
};

// Smallest r >= 1 at which the circuit approximates the problem on A.
FactorResult exact_factor(const Circuit& c, const VectorSet& a, Sense sense,
                          const CertifyOptions& opt = {});

struct DegreeResult {
  bool finite = false;
  Rational value;
  std::optional<ExponentVector> witness;  // minterm attaining the maximum
};

// Minimum r such that r A lies tightly above conv(B), for a boolean circuit
// computing f_A with A its 0-1 minterms. The LP optimum is attained, so the
// minimum exists and is rational.
DegreeResult semantic_degree(const Circuit& c, const VectorSet& a,
                             const CertifyOptions& opt = {});

struct BoundedCopyReport {
  // Every a in A has an r-bounded copy in B (so the degree is at most r).
  bool sufficient = false;
  std::vector<ExponentVector> without_copy;
  // Every a has an s-bounded copy with s <= r|a| - |a| + r.
  bool necessary = false;
  std::vector<ExponentVector> necessary_violations;
};

// b is an s-bounded copy of a when supp(b) = supp(a) and max entry <= s.
bool has_bounded_copy(const VectorSet& b, const ExponentVector& a, const Rational& s);
BoundedCopyReport bounded_copy_checks(const VectorSet& a, const VectorSet& b,
                                      const Rational& r);

// f_B == f_A for B produced by the constant-free version of c.
bool boolean_bound_check(const Circuit& c, const VectorSet& a,
                         std::size_t produced_limit = kDefaultProducedLimit);
bool boolean_bound_check(const VectorSet& produced, const VectorSet& a);

// Support-cover and r-bounded same-support monomial conditions on the
// polynomial of an arithmetic circuit. When both hold, the min-plus version
// (constants read as the tropical unit 0) is certified at r, and an
// InvariantError is raised if it is not.
bool arithmetic_witness_check(const Circuit& c, const SetFamily& f,
                              const Rational& r, const CertifyOptions& opt = {});

// Min-plus version of an arithmetic circuit with every constant set to 0.
Circuit arithmetic_to_minplus(const Circuit& c);

}  // namespace troplab

#endif  // TROPLAB_CERTIFIER_HPP_
