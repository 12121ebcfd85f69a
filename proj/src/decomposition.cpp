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

#include "troplab/decomposition.hpp"

#include <algorithm>

#include "troplab/certifier.hpp"
#include "troplab/error.hpp"

namespace troplab {
namespace {

ExponentVector subtract(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool in_residue(const VectorSet& produced, const VectorSet& b, const ExponentVector& y) {
  return std::all_of(produced.begin(), produced.end(),
                     [&](const ExponentVector& x) { return b.contains(add(x, y)); });
}

ElementSet support_set(const ExponentVector& v) {
  ElementSet s(v.size());
  for (auto i : support(v)) s.set(i);
  return s;
}

}  // namespace

std::vector<GateSumset> residues(const Circuit& c, std::size_t limit, Execution exec) {
  const std::vector<VectorSet> produced = produced_sets(c, limit);
  const VectorSet& b = produced[c.output()];
  std::vector<GateSumset> out(produced.size());
  for_each_index(produced.size(), exec, [&](std::size_t k) {
    const VectorSet& x = produced[k];
    std::vector<ExponentVector> ys;
    const ExponentVector& x0 = x[0];
    for (const auto& v : b) {
      if (!leq(x0, v)) continue;
      ExponentVector y = subtract(v, x0);
      if (in_residue(x, b, y)) ys.push_back(std::move(y));
    }
    out[k].gate = static_cast<NodeId>(k);
    out[k].produced = x;
    out[k].residue = VectorSet(c.num_vars(), std::move(ys));
    for (const auto& y : out[k].residue) {
      if (!in_residue(x, b, y)) throw InvariantError("residues: X + Y not inside B");
    }
  });
  return out;
}

NormMeasure inner_product_norm(const std::vector<Rational>& a) {
  for (const auto& ai : a) {
    if (ai.sign() < 0 || ai > Rational(1)) {
      throw PreconditionError("inner_product_norm: coefficients must lie in [0, 1]");
    }
  }
  return [a](const ExponentVector& x) {
    if (x.size() != a.size()) throw PreconditionError("norm: arity mismatch");
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) s += a[i] * Rational(static_cast<std::int64_t>(x[i]));
    }
    return s;
  };
}

std::vector<std::string> check_norm_axioms(const NormMeasure& mu, std::size_t n,
                                           const std::vector<ExponentVector>& vectors) {
  std::vector<std::string> out;
  if (mu(ExponentVector(n, 0)) > Rational(1)) out.push_back("mu(0) > 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (mu(unit_vector(n, i)) > Rational(1)) {
      out.push_back("mu(e_" + std::to_string(i + 1) + ") > 1");
    }
  }
  for (const auto& x : vectors) {
    for (const auto& y : vectors) {
      const Rational mx = mu(x);
      const Rational mxy = mu(add(x, y));
      if (mx > mxy) out.push_back("not monotone at " + to_string(x) + " + " + to_string(y));
      if (mxy > mx + mu(y)) {
        out.push_back("not subadditive at " + to_string(x) + " + " + to_string(y));
      }
    }
  }
  return out;
}

Decomposition decompose(const Circuit& c, const NormMeasure& mu,
                        const ExponentVector& b, const Rational& theta,
                        std::size_t limit) {
  return decompose(c, produced_sets(c, limit), mu, b, theta);
}

Decomposition decompose(const Circuit& c, const std::vector<VectorSet>& produced,
                        const NormMeasure& mu, const ExponentVector& b,
                        const Rational& theta) {
  const VectorSet& all = produced.at(c.output());
  if (!all.contains(b)) throw PreconditionError("decompose: b is not produced");
  const Rational norm_b = mu(b);
  if (norm_b <= Rational(1)) throw PreconditionError("decompose: mu(b) must exceed 1");
  if (theta < norm_b.reciprocal() || theta >= Rational(1)) {
    throw PreconditionError("decompose: need 1/mu(b) <= theta < 1");
  }
  const Rational bound = theta * norm_b;
  Decomposition d;
  d.norm_b = norm_b;
  NodeId v = c.output();
  ExponentVector x = b;
  ExponentVector y(b.size(), 0);
  Rational norm_x = norm_b;
  d.path.push_back(v);
  while (norm_x > bound) {
    const Node& node = c.node(v);
    if (node.kind == NodeKind::Add) {
      v = produced[node.left].contains(x) ? node.left : node.right;
    } else if (node.kind == NodeKind::Mul) {
      const VectorSet& left = produced[node.left];
      const VectorSet& right = produced[node.right];
      std::optional<std::pair<ExponentVector, ExponentVector>> split;
      for (const auto& xu : left) {
        if (leq(xu, x) && right.contains(subtract(x, xu))) {
          split.emplace(xu, subtract(x, xu));
          break;
        }
      }
      if (!split) throw InvariantError("decompose: no split at a Minkowski node");
      const Rational nu = mu(split->first);
      const Rational nw = mu(split->second);
      const Rational larger = max(nu, nw);
      // Claim: the larger part keeps at least half of mu(x), and neither
      // part exceeds it.
      if (larger * Rational(2) < norm_x || nu > norm_x || nw > norm_x) {
        throw InvariantError("decompose: norm is not monotone and subadditive here");
      }
      if (nu >= nw) {
        v = node.left;
        y = add(y, split->second);
        x = split->first;
        norm_x = nu;
      } else {
        v = node.right;
        y = add(y, split->first);
        x = split->second;
        norm_x = nw;
      }
    } else {
      throw InvariantError("decompose: reached an input with mu(x) above the window");
    }
    d.path.push_back(v);
  }
  d.gate = v;
  d.x = x;
  d.y = y;
  d.norm_x = norm_x;
  const bool ok = produced[v].contains(x) && add(x, y) == b &&
                  in_residue(produced[v], all, y) &&
                  theta * norm_b < norm_x * Rational(2) && norm_x <= bound;
  if (!ok) throw InvariantError("decompose: returned split failed verification");
  return d;
}

bool cross_disjoint(const Rectangle& r) {
  for (const auto& a : r.a_side) {
    for (const auto& b : r.b_side) {
      if (a.intersects(b)) return false;
    }
  }
  return true;
}

bool lies_below(const Rectangle& r, const SetFamily& f) {
  for (const auto& a : r.a_side) {
    for (const auto& b : r.b_side) {
      if (!f.has_superset_of(a | b)) return false;
    }
  }
  return true;
}

namespace {

bool balanced_counts(std::size_t in_union, std::size_t in_a, std::size_t in_b,
                     std::size_t size, const Rational& r, const Rational& beta) {
  const Rational f(static_cast<std::int64_t>(size));
  const Rational u(static_cast<std::int64_t>(in_union));
  const Rational a(static_cast<std::int64_t>(in_a));
  const Rational b(static_cast<std::int64_t>(in_b));
  return u >= f / r && a > beta * f / (Rational(2) * r) &&
         b >= (Rational(1) - beta) * f / r;
}

}  // namespace

bool balanced_in_rectangle(const ElementSet& f, const Rectangle& rect,
                           const Rational& r, const Rational& beta) {
  const std::size_t size = f.count();
  for (const auto& a : rect.a_side) {
    const std::size_t in_a = (f & a).count();
    for (const auto& b : rect.b_side) {
      if (balanced_counts((f & (a | b)).count(), in_a, (f & b).count(), size, r, beta)) {
        return true;
      }
    }
  }
  return false;
}

bool balanced_vectors(const ExponentVector& a, const VectorSet& x,
                      const VectorSet& y, const Rational& r, const Rational& beta) {
  auto dot = [&](const ExponentVector& v) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<std::size_t>(a[i]) * v[i];
    return s;
  };
  const auto size = static_cast<std::size_t>(weight(a));
  for (const auto& xv : x) {
    const std::size_t ax = dot(xv);
    for (const auto& yv : y) {
      const std::size_t ay = dot(yv);
      if (balanced_counts(ax + ay, ax, ay, size, r, beta)) return true;
    }
  }
  return false;
}

Rectangle rectangle_of(const GateSumset& s) {
  Rectangle rect;
  rect.ground_size = s.produced.arity();
  for (const auto& x : s.produced) rect.a_side.push_back(support_set(x));
  for (const auto& y : s.residue) rect.b_side.push_back(support_set(y));
  return rect;
}

AuditReport audit_circuit_rectangles(const Circuit& c, const SetFamily& f,
                                     const Rational& r, const Rational& beta,
                                     std::size_t limit, Execution exec) {
  if (c.semiring() != Semiring::MaxPlus) {
    throw PreconditionError("audit: circuit must be maxplus");
  }
  if (beta.sign() <= 0 || beta >= Rational(1)) {
    throw PreconditionError("audit: need 0 < beta < 1");
  }
  if (f.empty() || f.ground_size() != c.num_vars()) {
    throw PreconditionError("audit: family must be nonempty with the circuit's arity");
  }
  const VectorSet a = f.characteristic_vectors();
  CertifyOptions opt;
  opt.produced_limit = limit;
  opt.exec = exec;
  if (!certify_max(c, a, r, opt).verdict) {
    throw PreconditionError("audit: circuit is not certified at factor " + r.to_string());
  }

  const std::vector<GateSumset> sums = residues(c, limit, exec);
  std::vector<Rectangle> rects;
  for (const auto& s : sums) rects.push_back(rectangle_of(s));

  std::vector<std::size_t> large;
  const Rational threshold = r / beta;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (Rational(static_cast<std::int64_t>(f[i].count())) >= threshold) large.push_back(i);
  }

  AuditReport report;
  report.large_sets = large.size();
  report.rectangles.resize(rects.size());
  std::vector<std::vector<char>> balanced(rects.size(), std::vector<char>(large.size(), 0));
  std::vector<char> agree(rects.size(), 1);
  for_each_index(rects.size(), exec, [&](std::size_t k) {
    RectangleAudit& ra = report.rectangles[k];
    ra.gate = sums[k].gate;
    ra.a_count = rects[k].a_side.size();
    ra.b_count = rects[k].b_side.size();
    ra.below = lies_below(rects[k], f);
    ra.disjoint = cross_disjoint(rects[k]);
    for (std::size_t j = 0; j < large.size(); ++j) {
      const bool set_level = balanced_in_rectangle(f[large[j]], rects[k], r, beta);
      const bool vec_level = balanced_vectors(a[a.index_of(characteristic_vector(f[large[j]]))],
                                              sums[k].produced, sums[k].residue, r, beta);
      if (set_level != vec_level) agree[k] = 0;
      balanced[k][j] = set_level;
      if (set_level) ++ra.balanced;
    }
  });
  report.all_below = std::all_of(report.rectangles.begin(), report.rectangles.end(),
                                 [](const RectangleAudit& x) { return x.below; });
  report.all_disjoint = std::all_of(report.rectangles.begin(), report.rectangles.end(),
                                    [](const RectangleAudit& x) { return x.disjoint; });
  report.vector_set_agree = std::all_of(agree.begin(), agree.end(), [](char v) { return v; });
  for (std::size_t j = 0; j < large.size(); ++j) {
    bool covered = false;
    for (std::size_t k = 0; k < rects.size() && !covered; ++k) covered = balanced[k][j];
    if (!covered) report.uncovered.push_back(f[large[j]]);
  }
  for (const auto& ra : report.rectangles) report.h_max = std::max(report.h_max, ra.balanced);
  if (report.h_max > 0) {
    report.implied_bound = Rational(static_cast<std::int64_t>(report.large_sets),
                                    static_cast<std::int64_t>(report.h_max));
  }

  // The traversal with mu_a and theta = beta must land on a balanced rectangle.
  std::vector<VectorSet> produced;
  produced.reserve(sums.size());
  for (const auto& s : sums) produced.push_back(s.produced);
  const VectorSet& b = produced[c.output()];
  for (std::size_t j = 0; j < large.size(); ++j) {
    const ExponentVector av = characteristic_vector(f[large[j]]);
    std::vector<Rational> coeffs;
    for (auto e : av) coeffs.emplace_back(static_cast<std::int64_t>(e));
    const NormMeasure mu = inner_product_norm(coeffs);
    const ExponentVector* best = nullptr;
    Rational best_norm(-1);
    for (const auto& v : b) {
      Rational nv = mu(v);
      if (nv > best_norm) {
        best_norm = std::move(nv);
        best = &v;
      }
    }
    const Rational size(static_cast<std::int64_t>(weight(av)));
    if (best == nullptr || best_norm < size / r) {
      throw InvariantError("audit: certified circuit misses a feasible solution");
    }
    const Decomposition d = decompose(c, produced, mu, *best, beta);
    if (balanced[d.gate][j]) ++report.traversal_hits;
  }
  return report;
}

}  // namespace troplab
