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

#include "troplab/certifier.hpp"

#include <algorithm>

#include "troplab/error.hpp"

namespace troplab {
namespace {

struct Polynomial {
  VectorSet b;
  VectorSet b_zero;
  bool offsets_zero = true;
};

Polynomial polynomial_of(const Circuit& c, std::size_t limit) {
  const TropicalPolynomial poly = tropical_polynomial(c, limit);
  std::vector<ExponentVector> all;
  std::vector<ExponentVector> zero;
  bool offsets_zero = true;
  for (const auto& [b, offset] : poly) {
    all.push_back(b);
    if (offset.is_zero()) {
      zero.push_back(b);
    } else {
      offsets_zero = false;
    }
  }
  return {VectorSet(c.num_vars(), std::move(all)),
          VectorSet(c.num_vars(), std::move(zero)), offsets_zero};
}

void check_problem(const Circuit& c, const VectorSet& a, Semiring expected,
                   const char* op) {
  if (c.semiring() != expected) {
    throw PreconditionError(std::string(op) + ": circuit must be " +
                            std::string(semiring_name(expected)));
  }
  require_valid(c);
  if (a.empty()) throw PreconditionError(std::string(op) + ": A is empty");
  if (a.arity() != c.num_vars()) {
    throw PreconditionError(std::string(op) + ": arity of A differs from the circuit");
  }
  if (a.contains(ExponentVector(a.arity(), 0))) {
    throw PreconditionError(std::string(op) + ": A contains the zero vector");
  }
}

void check_factor(const Rational& r, const char* op) {
  if (r < Rational(1)) {
    throw PreconditionError(std::string(op) + ": factor " + r.to_string() +
                            " is below 1");
  }
}

bool all_pass(const std::vector<VectorCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VectorCheck& v) { return v.certificate.verdict; });
}

// A 0-1 antichain admits the support-restricted form of the min conditions.
bool antichain_01(const VectorSet& a) { return a.is_zero_one() && a.is_antichain(); }

Certificate direct_above(const ExponentVector& b, const VectorSet& a) {
  Certificate cert;
  cert.target = to_rational(b);
  cert.direction = Direction::Above;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (leq(a[j], b)) {
      cert.verdict = true;
      cert.lambda.emplace_back(j, Rational(1));
      cert.note = "direct";
      return cert;
    }
  }
  cert.note = "no vector of A below";
  return cert;
}

enum class ScaleMode { MaxT, MinR, MinRTight };

// MaxT: max t with t a <= c for some c in conv(V).
// MinR: min r with c <= r a for some c in conv(V); MinRTight additionally
// restricts V to vectors with the support of a. nullopt when no vector of V
// is admissible.
std::optional<Rational> scale_lp(const ExponentVector& a,
                                 const std::vector<ExponentVector>& gens,
                                 ScaleMode mode) {
  const std::vector<std::size_t> coords = support(a);
  std::vector<ExponentVector> proj;
  for (const auto& v : gens) {
    if (mode == ScaleMode::MinR && !support_subset(v, a)) continue;
    if (mode == ScaleMode::MinRTight && !same_support(v, a)) continue;
    ExponentVector p;
    p.reserve(coords.size());
    for (auto i : coords) p.push_back(v[i]);
    proj.push_back(std::move(p));
  }
  if (proj.empty()) return std::nullopt;
  VectorSet ps(coords.size(), std::move(proj));
  const VectorSet kept = mode == ScaleMode::MaxT ? maximal_elements(ps) : minimal_elements(ps);

  LinearProgram lp;
  const std::size_t k = kept.size();
  lp.num_vars = k + 1;  // lambda_1..lambda_k, then the scale
  LpConstraint sum;
  sum.coeffs.assign(k + 1, Rational(1));
  sum.coeffs[k] = 0;
  sum.relation = Relation::Equal;
  sum.rhs = 1;
  lp.constraints.push_back(std::move(sum));
  for (std::size_t r = 0; r < coords.size(); ++r) {
    LpConstraint row;
    for (const auto& v : kept) row.coeffs.emplace_back(static_cast<std::int64_t>(v[r]));
    row.coeffs.push_back(-Rational(static_cast<std::int64_t>(a[coords[r]])));
    row.relation = mode == ScaleMode::MaxT ? Relation::GreaterEqual : Relation::LessEqual;
    row.rhs = 0;
    lp.constraints.push_back(std::move(row));
  }
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  lp.goal = mode == ScaleMode::MaxT ? Goal::Maximize : Goal::Minimize;
  const LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal) {
    throw InvariantError("scale LP did not reach an optimum");
  }
  return res.value;
}

}  // namespace

DominanceQuery query_for(const CertificateBundle& bundle, const VectorCheck& check) {
  DominanceQuery q;
  q.tight = check.tight;
  if (check.kind == CheckKind::Validity) {
    q.target = to_rational(check.subject);
    q.generators = bundle.a.vectors();
    q.direction = bundle.sense == Sense::Max ? Direction::Below : Direction::Above;
  } else if (bundle.sense == Sense::Max) {
    q.target = scaled(check.subject, bundle.factor.reciprocal());
    q.generators = bundle.b.vectors();
    q.direction = Direction::Below;
  } else {
    q.target = scaled(check.subject, bundle.factor);
    q.generators = bundle.b_zero.vectors();
    q.direction = Direction::Above;
  }
  return q;
}

CertificateBundle certify_max(const Circuit& c, const VectorSet& a,
                              const Rational& r, const CertifyOptions& opt) {
  check_problem(c, a, Semiring::MaxPlus, "certify_max");
  check_factor(r, "certify_max");
  strip_constants(c);  // rejects degenerate circuits
  Polynomial poly = polynomial_of(c, opt.produced_limit);

  CertificateBundle bundle;
  bundle.sense = Sense::Max;
  bundle.factor = r;
  bundle.a = a;
  bundle.b = std::move(poly.b);
  bundle.b_zero = std::move(poly.b_zero);
  bundle.validity.resize(bundle.b.size());
  bundle.coverage.resize(a.size());
  for_each_index(bundle.b.size(), opt.exec, [&](std::size_t i) {
    VectorCheck& check = bundle.validity[i];
    check.kind = CheckKind::Validity;
    check.subject = bundle.b[i];
    check.certificate = lp_feasible(query_for(bundle, check));
  });
  for_each_index(a.size(), opt.exec, [&](std::size_t i) {
    VectorCheck& check = bundle.coverage[i];
    check.kind = CheckKind::Coverage;
    check.subject = a[i];
    check.certificate = lp_feasible(query_for(bundle, check));
  });
  if (!poly.offsets_zero) {
    bundle.note = "nonzero constant offset: the circuit exceeds the optimum at x = 0";
  }
  bundle.verdict = poly.offsets_zero && all_pass(bundle.validity) && all_pass(bundle.coverage);
  return bundle;
}

CertificateBundle certify_min(const Circuit& c, const VectorSet& a,
                              const Rational& r, const CertifyOptions& opt) {
  check_problem(c, a, Semiring::MinPlus, "certify_min");
  check_factor(r, "certify_min");
  strip_constants(c);
  Polynomial poly = polynomial_of(c, opt.produced_limit);

  CertificateBundle bundle;
  bundle.sense = Sense::Min;
  bundle.factor = r;
  bundle.antichain_mode = antichain_01(a);
  bundle.a = a;
  bundle.b = std::move(poly.b);
  bundle.b_zero = std::move(poly.b_zero);
  bundle.validity.resize(bundle.b.size());
  bundle.coverage.resize(a.size());
  for_each_index(bundle.b.size(), opt.exec, [&](std::size_t i) {
    VectorCheck& check = bundle.validity[i];
    check.kind = CheckKind::Validity;
    check.subject = bundle.b[i];
    check.certificate = bundle.antichain_mode
                            ? direct_above(check.subject, bundle.a)
                            : lp_feasible(query_for(bundle, check));
  });
  for_each_index(a.size(), opt.exec, [&](std::size_t i) {
    VectorCheck& check = bundle.coverage[i];
    check.kind = CheckKind::Coverage;
    check.subject = a[i];
    check.tight = bundle.antichain_mode;
    check.certificate = lp_feasible(query_for(bundle, check));
  });
  bundle.verdict = all_pass(bundle.validity) && all_pass(bundle.coverage);
  return bundle;
}

FactorResult exact_factor(const Circuit& c, const VectorSet& a, Sense sense,
                          const CertifyOptions& opt) {
  const bool is_max = sense == Sense::Max;
  check_problem(c, a, is_max ? Semiring::MaxPlus : Semiring::MinPlus, "exact_factor");
  strip_constants(c);
  const Polynomial poly = polynomial_of(c, opt.produced_limit);
  FactorResult result;

  if (is_max && !poly.offsets_zero) {
    result.kind = FactorResult::Kind::Invalid;
    result.note = "nonzero constant offset";
    return result;
  }
  const bool tight = !is_max && antichain_01(a);
  std::vector<char> valid(poly.b.size(), 0);
  for_each_index(poly.b.size(), opt.exec, [&](std::size_t i) {
    if (tight) {
      valid[i] = direct_above(poly.b[i], a).verdict;
      return;
    }
    DominanceQuery q;
    q.target = to_rational(poly.b[i]);
    q.generators = a.vectors();
    q.direction = is_max ? Direction::Below : Direction::Above;
    valid[i] = lp_feasible(q).verdict;
  });
  for (std::size_t i = 0; i < valid.size(); ++i) {
    if (!valid[i]) {
      result.kind = FactorResult::Kind::Invalid;
      result.witness = poly.b[i];
      result.note = is_max ? "produced vector not below conv(A)"
                           : "produced vector not above conv(A)";
      return result;
    }
  }

  const ScaleMode mode = is_max ? ScaleMode::MaxT
                                : (tight ? ScaleMode::MinRTight : ScaleMode::MinR);
  const auto& gens = is_max ? poly.b.vectors() : poly.b_zero.vectors();
  std::vector<std::optional<Rational>> per(a.size());
  for_each_index(a.size(), opt.exec,
                 [&](std::size_t i) { per[i] = scale_lp(a[i], gens, mode); });

  Rational best(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::optional<Rational> factor;
    if (per[i] && (!is_max || per[i]->sign() > 0)) {
      factor = is_max ? per[i]->reciprocal() : *per[i];
    }
    if (!factor) {
      result.kind = FactorResult::Kind::Infinite;
      result.witness = a[i];
      result.note = is_max ? "some feasible solution gets no positive share"
                           : "empty support filter";
      return result;
    }
    if (*factor > best || (!result.witness && *factor == best)) {
      best = *factor;
      result.witness = a[i];
    }
  }
  result.kind = FactorResult::Kind::Finite;
  result.value = best;
  return result;
}

DegreeResult semantic_degree(const Circuit& c, const VectorSet& a,
                             const CertifyOptions& opt) {
  if (c.semiring() != Semiring::Boolean) {
    throw PreconditionError("semantic_degree: circuit must be boolean");
  }
  if (a.empty() || a.arity() != c.num_vars() || !a.is_zero_one()) {
    throw PreconditionError("semantic_degree: A must be nonempty 0-1 minterms of arity n");
  }
  const VectorSet b = produced_set(c, opt.produced_limit);
  const bool computes = c.num_vars() <= kMaxTableArity
                            ? boolean_function_of(b) == boolean_function_of(a)
                            : similar(a, b);
  if (!computes) {
    throw PreconditionError("semantic_degree: circuit does not compute f_A");
  }
  std::vector<std::optional<Rational>> per(a.size());
  for_each_index(a.size(), opt.exec, [&](std::size_t i) {
    per[i] = scale_lp(a[i], b.vectors(), ScaleMode::MinRTight);
  });
  DegreeResult result;
  Rational best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!per[i]) {
      result.witness = a[i];
      return result;
    }
    if (!result.witness || *per[i] > best) {
      best = *per[i];
      result.witness = a[i];
    }
  }
  result.finite = true;
  result.value = best;
  return result;
}

bool has_bounded_copy(const VectorSet& b, const ExponentVector& a, const Rational& s) {
  return std::any_of(b.begin(), b.end(), [&](const ExponentVector& v) {
    return same_support(v, a) &&
           Rational(static_cast<std::int64_t>(max_entry(v))) <= s;
  });
}

BoundedCopyReport bounded_copy_checks(const VectorSet& a, const VectorSet& b,
                                      const Rational& r) {
  if (!a.is_zero_one()) throw PreconditionError("bounded_copy_checks: A must be 0-1");
  if (a.arity() != b.arity()) throw PreconditionError("bounded_copy_checks: arity mismatch");
  BoundedCopyReport report;
  for (const auto& v : a) {
    if (!has_bounded_copy(b, v, r)) report.without_copy.push_back(v);
    const Rational size(static_cast<std::int64_t>(weight(v)));
    const Rational s = r * size - size + r;
    if (!has_bounded_copy(b, v, s)) report.necessary_violations.push_back(v);
  }
  report.sufficient = report.without_copy.empty();
  report.necessary = report.necessary_violations.empty();
  return report;
}

bool boolean_bound_check(const Circuit& c, const VectorSet& a,
                         std::size_t produced_limit) {
  if (c.semiring() != Semiring::MinPlus) {
    throw PreconditionError("boolean_bound_check: circuit must be minplus");
  }
  return boolean_bound_check(produced_set(strip_constants(c), produced_limit), a);
}

bool boolean_bound_check(const VectorSet& produced, const VectorSet& a) {
  if (produced.arity() != a.arity()) {
    throw PreconditionError("boolean_bound_check: arity mismatch");
  }
  if (a.arity() > kMaxTableArity) return similar(a, produced);
  return boolean_function_of(produced) == boolean_function_of(a);
}

Circuit arithmetic_to_minplus(const Circuit& c) {
  std::vector<Node> nodes = c.nodes();
  for (auto& node : nodes) {
    if (node.kind == NodeKind::Const) node.value = 0;
  }
  return Circuit(Semiring::MinPlus, c.num_vars(), std::move(nodes), c.output());
}

bool arithmetic_witness_check(const Circuit& c, const SetFamily& f,
                              const Rational& r, const CertifyOptions& opt) {
  if (c.semiring() != Semiring::Arithmetic) {
    throw PreconditionError("arithmetic_witness_check: circuit must be arithmetic");
  }
  if (f.ground_size() != c.num_vars()) {
    throw PreconditionError("arithmetic_witness_check: arity mismatch");
  }
  if (f.empty() || !is_antichain(f)) {
    throw PreconditionError("arithmetic_witness_check: F must be a nonempty antichain");
  }
  const VectorSet b = produced_set(c, opt.produced_limit);
  const VectorSet a = f.characteristic_vectors();
  bool cover = true;
  for (const auto& v : b) {
    cover = cover && std::any_of(a.begin(), a.end(), [&](const ExponentVector& s) {
              return support_subset(s, v);
            });
  }
  bool bounded = true;
  for (const auto& s : a) bounded = bounded && has_bounded_copy(b, s, r);
  const bool holds = cover && bounded;
  if (holds && r >= Rational(1)) {
    const auto bundle = certify_min(arithmetic_to_minplus(c), a, r, opt);
    if (!bundle.verdict) {
      throw InvariantError(
          "arithmetic_witness_check: conditions hold but the min-plus version "
          "is not certified at r = " + r.to_string());
    }
  }
  return holds;
}

}  // namespace troplab
