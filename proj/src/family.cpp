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

#include "troplab/family.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>

#include "troplab/error.hpp"

namespace troplab {

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == ElementSet::npos && j != ElementSet::npos;
}

std::vector<std::size_t> elements_of(const ElementSet& s) {
  std::vector<std::size_t> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

ElementSet make_set(std::size_t n, const std::vector<std::size_t>& elements) {
  ElementSet s(n);
  for (auto e : elements) {
    if (e >= n) {
      throw PreconditionError("element " + std::to_string(e + 1) +
                              " outside ground set of size " + std::to_string(n));
    }
    s.set(e);
  }
  return s;
}

ExponentVector characteristic_vector(const ElementSet& s) {
  ExponentVector v(s.size(), 0);
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) v[i] = 1;
  return v;
}

namespace {

std::vector<ElementSet> to_bitsets(
    std::size_t n, const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<ElementSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(make_set(n, s));
  return out;
}

}  // namespace

SetFamily::SetFamily(std::size_t ground_size,
                     const std::vector<std::vector<std::size_t>>& sets)
    : SetFamily(ground_size, to_bitsets(ground_size, sets)) {}

SetFamily::SetFamily(std::size_t ground_size, std::vector<ElementSet> sets)
    : n_(ground_size), sets_(std::move(sets)) {
  for (const auto& s : sets_) {
    if (s.size() != n_) throw PreconditionError("family: set has wrong ground size");
    if (s.none()) throw PreconditionError("family: empty set is not allowed");
  }
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(const ElementSet& s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s, canonical_less);
  return it != sets_.end() && *it == s;
}

bool SetFamily::has_superset_of(const ElementSet& s) const {
  return std::any_of(sets_.begin(), sets_.end(),
                     [&](const ElementSet& f) { return s.is_subset_of(f); });
}

bool SetFamily::has_subset_of(const ElementSet& s) const {
  return std::any_of(sets_.begin(), sets_.end(),
                     [&](const ElementSet& f) { return f.is_subset_of(s); });
}

std::optional<std::size_t> SetFamily::uniform_size() const {
  if (sets_.empty()) return std::nullopt;
  const std::size_t m = sets_.front().count();
  for (const auto& s : sets_) {
    if (s.count() != m) return std::nullopt;
  }
  return m;
}

std::size_t SetFamily::max_set_size() const {
  std::size_t m = 0;
  for (const auto& s : sets_) m = std::max(m, s.count());
  return m;
}

VectorSet SetFamily::characteristic_vectors() const {
  std::vector<ExponentVector> vs;
  vs.reserve(sets_.size());
  for (const auto& s : sets_) vs.push_back(characteristic_vector(s));
  return VectorSet(n_, std::move(vs));
}

SetFamily SetFamily::from_vectors(const VectorSet& vectors) {
  std::vector<ElementSet> sets;
  for (const auto& v : vectors) {
    if (!is_zero_one(v)) {
      throw PreconditionError("family: vector " + to_string(v) + " is not 0-1");
    }
    ElementSet s(vectors.arity());
    for (auto i : support(v)) s.set(i);
    sets.push_back(std::move(s));
  }
  return SetFamily(vectors.arity(), std::move(sets));
}

SetFamily all_subsets_of_size(std::size_t n, std::size_t m) {
  if (m == 0 || m > n) throw PreconditionError("subset size out of range");
  std::vector<ElementSet> sets;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    sets.push_back(make_set(n, idx));
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return SetFamily(n, std::move(sets));
}

SetFamily family_difference(const SetFamily& universe, const SetFamily& removed) {
  std::vector<ElementSet> kept;
  for (const auto& s : universe) {
    if (!removed.contains(s)) kept.push_back(s);
  }
  return SetFamily(universe.ground_size(), std::move(kept));
}

Rational set_weight(const ElementSet& s, const Weighting& x) {
  Rational w;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    if (!x[i].is_zero()) w += x[i];
  }
  return w;
}

Rational optimum(const SetFamily& f, const Weighting& x, Sense sense) {
  if (f.empty()) throw PreconditionError("optimum: empty family");
  check_weighting(x, f.ground_size());
  Rational best = set_weight(f[0], x);
  for (std::size_t i = 1; i < f.size(); ++i) {
    Rational w = set_weight(f[i], x);
    if (sense == Sense::Min ? w < best : w > best) best = std::move(w);
  }
  return best;
}

bool is_antichain(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i != j && f[i].is_subset_of(f[j])) return false;
    }
  }
  return true;
}

bool is_uniform(const SetFamily& f, std::size_t m) {
  return std::all_of(f.begin(), f.end(),
                     [m](const ElementSet& s) { return s.count() == m; });
}

bool is_d_disjoint(const SetFamily& f, std::size_t d) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if ((f[i] & f[j]).count() >= d) return false;
    }
  }
  return true;
}

bool is_separated(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if ((f[i] ^ f[j]).count() <= 2) return false;
    }
  }
  return true;
}

bool is_k_dense(const SetFamily& f, std::size_t k, Execution exec) {
  const std::size_t n = f.ground_size();
  if (n > kMaxDenseGround) {
    throw ResourceError("k-denseness is limited to ground sets of size <= " +
                        std::to_string(kMaxDenseGround));
  }
  if (k > n) return false;
  std::vector<std::uint32_t> masks;
  masks.reserve(f.size());
  for (const auto& s : f) masks.push_back(static_cast<std::uint32_t>(s.to_ulong()));
  auto covered = [&](std::uint32_t sub) {
    for (auto m : masks) {
      if ((sub & ~m) == 0) return true;
    }
    return false;
  };
  const long long total = 1LL << n;
  if (exec == Execution::Serial) {
    for (long long sub = 0; sub < total; ++sub) {
      const auto s = static_cast<std::uint32_t>(sub);
      if (static_cast<std::size_t>(std::popcount(s)) == k && !covered(s)) return false;
    }
    return true;
  }
  std::atomic<bool> dense{true};
#pragma omp parallel for schedule(static)
  for (long long sub = 0; sub < total; ++sub) {
    if (!dense.load(std::memory_order_relaxed)) continue;
    const auto s = static_cast<std::uint32_t>(sub);
    if (static_cast<std::size_t>(std::popcount(s)) == k && !covered(s)) {
      dense.store(false, std::memory_order_relaxed);
    }
  }
  return dense.load();
}

MatroidReport matroid_check(const SetFamily& f) {
  if (!f.empty() && !f.uniform_size()) {
    throw PreconditionError("matroid_check: family is not uniform");
  }
  MatroidReport report;
  for (std::size_t ai = 0; ai < f.size(); ++ai) {
    for (std::size_t bi = 0; bi < f.size(); ++bi) {
      if (ai == bi) continue;
      const ElementSet& a = f[ai];
      const ElementSet& b = f[bi];
      const ElementSet a_only = a - b;
      const ElementSet b_only = b - a;
      for (auto x = a_only.find_first(); x != ElementSet::npos;
           x = a_only.find_next(x)) {
        bool found = false;
        for (auto y = b_only.find_first(); y != ElementSet::npos && !found;
             y = b_only.find_next(y)) {
          ElementSet swapped = a;
          swapped.reset(x);
          swapped.set(y);
          found = f.contains(swapped);
        }
        if (!found) {
          report.witness = ExchangeWitness{ai, bi, x};
          return report;
        }
      }
    }
  }
  report.is_matroid = true;
  return report;
}

bool is_sidon(const VectorSet& a) {
  if (a.size() > kMaxSidonSize) {
    throw ResourceError("Sidon check is limited to " +
                        std::to_string(kMaxSidonSize) + " vectors");
  }
  std::vector<ExponentVector> sums;
  sums.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) sums.push_back(add(a[i], a[j]));
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

FamilyPredicates predicates(const SetFamily& f, const PredicateParams& params) {
  FamilyPredicates p;
  p.is_antichain = is_antichain(f);
  p.uniform_size = f.uniform_size();
  if (params.m) p.is_uniform = is_uniform(f, *params.m);
  if (params.k) p.is_k_dense = is_k_dense(f, *params.k);
  if (params.d) p.is_d_disjoint = is_d_disjoint(f, *params.d);
  p.is_separated = is_separated(f);
  p.is_sidon = f.size() <= kMaxSidonSize && is_sidon(f.characteristic_vectors());
  if (p.uniform_size) p.matroid = matroid_check(f);
  return p;
}

bool similar(const VectorSet& a, const VectorSet& b) {
  if (a.arity() != b.arity()) throw PreconditionError("similar: arity mismatch");
  auto covers = [](const VectorSet& outer, const VectorSet& inner) {
    for (const auto& u : outer) {
      bool ok = false;
      for (const auto& v : inner) {
        if (support_subset(v, u)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  return covers(b, a) && covers(a, b);
}

BooleanTable::BooleanTable(std::size_t arity) : arity_(arity) {
  if (arity > kMaxTableArity) {
    throw ResourceError("truth tables are limited to " +
                        std::to_string(kMaxTableArity) + " variables");
  }
  bits_.resize(std::size_t{1} << arity);
}

bool BooleanTable::is_monotone() const {
  const std::uint32_t total = 1u << arity_;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!bits_[mask]) continue;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (!bits_[mask | (1u << i)]) return false;
    }
  }
  return true;
}

BooleanTable boolean_function_of(const VectorSet& a) {
  BooleanTable t(a.arity());
  auto bits = t.bits();
  for (const auto& v : a) {
    std::uint32_t mask = 0;
    for (auto i : support(v)) mask |= 1u << i;
    bits[mask] = true;
  }
  // Upward closure, one coordinate at a time.
  const std::uint32_t total = 1u << a.arity();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if ((mask & bit) && bits[mask ^ bit]) bits[mask] = true;
    }
  }
  for (std::uint32_t mask = 0; mask < total; ++mask) t.set(mask, bits[mask]);
  return t;
}

BooleanTable boolean_table(const Circuit& c) {
  require_valid(c);
  const std::size_t n = c.num_vars();
  BooleanTable result(n);
  const std::size_t total = std::size_t{1} << n;
  std::vector<boost::dynamic_bitset<>> val;
  val.reserve(c.nodes().size());
  for (const auto& node : c.nodes()) {
    boost::dynamic_bitset<> bits(total);
    switch (node.kind) {
      case NodeKind::Var:
        for (std::size_t mask = 0; mask < total; ++mask) {
          bits[mask] = (mask >> node.var) & 1;
        }
        break;
      case NodeKind::Const:
        if (node.value != Rational(0) && node.value != Rational(1)) {
          throw PreconditionError("boolean_table: constant outside {0,1}");
        }
        if (node.value == Rational(1)) bits.set();
        break;
      case NodeKind::Add: bits = val[node.left] | val[node.right]; break;
      case NodeKind::Mul: bits = val[node.left] & val[node.right]; break;
    }
    val.push_back(std::move(bits));
  }
  const auto& out = val[c.output()];
  for (std::size_t mask = 0; mask < total; ++mask) {
    result.set(static_cast<std::uint32_t>(mask), out[mask]);
  }
  return result;
}

Rational kdense_sampling_experiment(std::size_t n, std::size_t trials,
                                    std::uint64_t seed, Execution exec) {
  if (n % 2 != 0 || n < 4 || n > 14) {
    throw PreconditionError("kdense_sampling_experiment: need even n in [4, 14]");
  }
  if (trials == 0) throw PreconditionError("kdense_sampling_experiment: no trials");
  const SetFamily all = all_subsets_of_size(n, n / 2);
  std::vector<char> dense(trials, 0);
  for_each_index(trials, exec, [&](std::size_t t) {
    // One independent stream per trial keeps serial and parallel runs equal.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (t + 1)));
    std::vector<ElementSet> chosen;
    for (const auto& s : all) {
      if (rng() >> 63) chosen.push_back(s);
    }
    dense[t] = is_k_dense(SetFamily(n, std::move(chosen)), n / 2 - 2,
                          Execution::Serial);
  });
  const auto hits = std::count(dense.begin(), dense.end(), 1);
  return Rational(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(trials));
}

}  // namespace troplab
