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

#include "troplab/lp.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "troplab/error.hpp"

namespace troplab {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), a_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r][cols_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }

  void remove_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

  void pivot(std::size_t r, std::size_t c, std::vector<Rational>& cost) {
    const Rational inv = a_[r][c].reciprocal();
    for (auto& v : a_[r]) {
      if (!v.is_zero()) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c].is_zero()) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!a_[r][j].is_zero()) row[j] -= f * a_[r][j];
      }
    };
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i != r) eliminate(a_[i]);
    }
    eliminate(cost);
    basis_[r] = c;
    ++pivots_;
  }

  // Minimizes cost . x over columns with allowed[j]. Returns false when
  // unbounded. `cost` becomes the reduced-cost row; its last entry holds
  // minus the objective value.
  bool minimize(const std::vector<Rational>& c, const std::vector<bool>& allowed,
                std::vector<Rational>& cost) {
    cost.assign(cols_ + 1, Rational());
    for (std::size_t j = 0; j < cols_; ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!a_[i][j].is_zero()) cost[j] -= cb * a_[i][j];
      }
    }
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][*entering].sign() <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][*entering];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering, cost);
    }
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.constraints.size();
  if (!lp.objective.empty() && lp.objective.size() != n) {
    throw PreconditionError("lp: objective has wrong length");
  }
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  std::vector<Relation> rel(m);
  std::vector<bool> negate(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    if (row.coeffs.size() != n) throw PreconditionError("lp: row has wrong length");
    rel[i] = row.relation;
    if (row.rhs.sign() < 0) {
      negate[i] = true;
      if (rel[i] == Relation::LessEqual) {
        rel[i] = Relation::GreaterEqual;
      } else if (rel[i] == Relation::GreaterEqual) {
        rel[i] = Relation::LessEqual;
      }
    }
    if (rel[i] != Relation::Equal) ++slacks;
    if (rel[i] != Relation::LessEqual) ++artificials;
  }
  const std::size_t cols = n + slacks + artificials;
  Tableau t(m, cols);
  std::size_t next_slack = n;
  std::size_t next_art = n + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = negate[i] ? -row.coeffs[j] : row.coeffs[j];
    t.rhs(i) = negate[i] ? -row.rhs : row.rhs;
    switch (rel[i]) {
      case Relation::LessEqual:
        t.at(i, next_slack) = 1;
        t.basis(i) = next_slack++;
        break;
      case Relation::GreaterEqual:
        t.at(i, next_slack++) = -1;
        t.at(i, next_art) = 1;
        t.basis(i) = next_art++;
        break;
      case Relation::Equal:
        t.at(i, next_art) = 1;
        t.basis(i) = next_art++;
        break;
    }
  }

  LpResult result;
  std::vector<Rational> cost;
  const std::size_t first_art = n + slacks;
  if (artificials > 0) {
    std::vector<Rational> c(cols);
    for (std::size_t j = first_art; j < cols; ++j) c[j] = 1;
    t.minimize(c, std::vector<bool>(cols, true), cost);
    if (!cost[cols].is_zero()) {
      result.status = LpStatus::Infeasible;
      result.pivots = t.pivots();
      return result;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis(i) < first_art) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (!t.at(i, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(i, *col, cost);
        ++i;
      } else {
        t.remove_row(i);  // redundant constraint
      }
    }
  }

  std::vector<bool> allowed(cols, false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<long>(first_art), true);
  std::vector<Rational> c(cols);
  if (!lp.objective.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      c[j] = lp.goal == Goal::Maximize ? -lp.objective[j] : lp.objective[j];
    }
  }
  if (!t.minimize(c, allowed, cost)) {
    result.status = LpStatus::Unbounded;
    result.pivots = t.pivots();
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basis(i) < n) result.x[t.basis(i)] = t.rhs(i);
  }
  for (std::size_t j = 0; j < n && !lp.objective.empty(); ++j) {
    result.value += lp.objective[j] * result.x[j];
  }
  result.pivots = t.pivots();
  return result;
}

std::vector<Rational> to_rational(const ExponentVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto e : v) out.emplace_back(static_cast<std::int64_t>(e));
  return out;
}

std::vector<Rational> scaled(const ExponentVector& v, const Rational& factor) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto e : v) out.push_back(Rational(static_cast<std::int64_t>(e)) * factor);
  return out;
}

namespace {

std::mutex observer_mutex;
DominanceObserver current_observer;

void notify(const DominanceQuery& q, const Certificate& c) {
  std::lock_guard<std::mutex> lock(observer_mutex);
  if (current_observer) current_observer(q, c);
}

bool support_equals(const ExponentVector& v, const std::vector<Rational>& u) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((v[i] != 0) != (u[i].sign() != 0)) return false;
  }
  return true;
}

// Componentwise comparison of a generator with the target.
bool dominates(const ExponentVector& v, const std::vector<Rational>& u, Direction dir) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational vi(static_cast<std::int64_t>(v[i]));
    if (dir == Direction::Below ? vi < u[i] : vi > u[i]) return false;
  }
  return true;
}

Certificate decide(const DominanceQuery& q) {
  const std::size_t n = q.target.size();
  Certificate cert;
  cert.target = q.target;
  cert.direction = q.direction;
  for (const auto& v : q.generators) {
    if (v.size() != n) throw PreconditionError("lp_feasible: arity mismatch");
  }

  // Admissible generators: tight mode needs equal support; in the Above
  // direction a positive entry where the target is 0 can never be used.
  std::vector<std::size_t> cand;
  for (std::size_t j = 0; j < q.generators.size(); ++j) {
    const auto& v = q.generators[j];
    if (q.tight && !support_equals(v, q.target)) continue;
    if (q.direction == Direction::Above) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = v[i] == 0 || q.target[i].sign() > 0;
      if (!ok) continue;
    }
    cand.push_back(j);
  }
  if (cand.empty()) {
    cert.note = q.tight ? "empty support filter" : "no admissible generator";
    return cert;
  }
  for (auto j : cand) {
    if (dominates(q.generators[j], q.target, q.direction)) {
      cert.verdict = true;
      cert.lambda.emplace_back(j, Rational(1));
      cert.note = "single generator";
      return cert;
    }
  }

  // Only coordinates with a positive target entry constrain the problem.
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (q.target[i].sign() > 0) coords.push_back(i);
  }
  if (q.direction == Direction::Above && coords.size() < n) {
    // Coordinates with target 0 are already excluded by the filter above;
    // a negative target entry cannot be met by nonnegative generators.
    for (std::size_t i = 0; i < n; ++i) {
      if (q.target[i].sign() < 0) {
        cert.note = "negative target entry";
        return cert;
      }
    }
  }
  // Project, deduplicate, and drop generators dominated by another one.
  std::vector<std::pair<ExponentVector, std::size_t>> proj;
  for (auto j : cand) {
    ExponentVector p;
    p.reserve(coords.size());
    for (auto i : coords) p.push_back(q.generators[j][i]);
    proj.emplace_back(std::move(p), j);
  }
  std::sort(proj.begin(), proj.end());
  proj.erase(std::unique(proj.begin(), proj.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             proj.end());
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < proj.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < proj.size() && !dominated; ++b) {
      if (a == b) continue;
      dominated = q.direction == Direction::Below ? leq(proj[a].first, proj[b].first)
                                                  : leq(proj[b].first, proj[a].first);
    }
    if (!dominated) keep.push_back(a);
  }

  LinearProgram lp;
  lp.num_vars = keep.size();
  LpConstraint sum;
  sum.coeffs.assign(keep.size(), Rational(1));
  sum.relation = Relation::Equal;
  sum.rhs = 1;
  lp.constraints.push_back(std::move(sum));
  for (std::size_t r = 0; r < coords.size(); ++r) {
    LpConstraint row;
    row.coeffs.reserve(keep.size());
    for (auto a : keep) row.coeffs.emplace_back(static_cast<std::int64_t>(proj[a].first[r]));
    row.relation = q.direction == Direction::Below ? Relation::GreaterEqual
                                                   : Relation::LessEqual;
    row.rhs = q.target[coords[r]];
    lp.constraints.push_back(std::move(row));
  }
  const LpResult res = solve(lp);
  if (res.status != LpStatus::Optimal) {
    cert.note = "no convex combination";
    return cert;
  }
  cert.verdict = true;
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (res.x[t].sign() > 0) cert.lambda.emplace_back(proj[keep[t]].second, res.x[t]);
  }
  std::sort(cert.lambda.begin(), cert.lambda.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  cert.note = "simplex";
  return cert;
}

}  // namespace

Certificate lp_feasible(const DominanceQuery& q) {
  Certificate cert = decide(q);
  if (cert.verdict && !verify_witness(q, cert)) {
    throw InvariantError("lp_feasible: witness failed re-verification");
  }
  notify(q, cert);
  return cert;
}

bool verify_witness(const DominanceQuery& q, const Certificate& c) {
  if (!c.verdict || c.lambda.empty()) return false;
  const std::size_t n = q.target.size();
  Rational total;
  std::vector<Rational> comb(n);
  for (const auto& [j, l] : c.lambda) {
    if (j >= q.generators.size() || l.sign() <= 0) return false;
    const auto& v = q.generators[j];
    if (q.tight && !support_equals(v, q.target)) return false;
    total += l;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != 0) comb[i] += l * Rational(static_cast<std::int64_t>(v[i]));
    }
  }
  if (total != Rational(1)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (q.direction == Direction::Below ? q.target[i] > comb[i] : q.target[i] < comb[i]) {
      return false;
    }
  }
  return true;
}

ScopedDominanceObserver::ScopedDominanceObserver(DominanceObserver observer) {
  std::lock_guard<std::mutex> lock(observer_mutex);
  previous_ = std::move(current_observer);
  current_observer = std::move(observer);
}

ScopedDominanceObserver::~ScopedDominanceObserver() {
  std::lock_guard<std::mutex> lock(observer_mutex);
  current_observer = std::move(previous_);
}

}  // namespace troplab
