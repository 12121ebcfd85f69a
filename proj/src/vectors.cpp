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

#include "troplab/vectors.hpp"

#include <algorithm>
#include <unordered_set>

#include "troplab/error.hpp"

namespace troplab {

std::size_t VectorHash::operator()(const ExponentVector& v) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : v) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ExponentVector unit_vector(std::size_t n, std::size_t i) {
  ExponentVector v(n, 0);
  v.at(i) = 1;
  return v;
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool leq(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool is_zero(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; });
}

bool is_zero_one(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto e) { return e <= 1; });
}

std::vector<std::size_t> support(const ExponentVector& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.push_back(i);
  }
  return s;
}

bool same_support(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
  }
  return true;
}

bool support_subset(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] == 0) return false;
  }
  return true;
}

std::uint64_t weight(const ExponentVector& v) {
  std::uint64_t w = 0;
  for (auto e : v) w += e;
  return w;
}

std::uint32_t max_entry(const ExponentVector& v) {
  std::uint32_t m = 0;
  for (auto e : v) m = std::max(m, e);
  return m;
}

Rational inner_product(const ExponentVector& b, const Weighting& x) {
  Rational sum;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0) sum += Rational(static_cast<std::int64_t>(b[i])) * x[i];
  }
  return sum;
}

std::string to_string(const ExponentVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void check_weighting(const Weighting& x, std::size_t n) {
  if (x.size() != n) {
    throw PreconditionError("weighting has " + std::to_string(x.size()) +
                            " entries, expected " + std::to_string(n));
  }
  for (const auto& w : x) {
    if (w.sign() < 0) throw PreconditionError("negative weight " + w.to_string());
  }
}

VectorSet::VectorSet(std::size_t arity, std::vector<ExponentVector> vectors)
    : arity_(arity), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.size() != arity_) {
      throw PreconditionError("vector " + troplab::to_string(v) +
                              " does not have arity " + std::to_string(arity_));
    }
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool VectorSet::contains(const ExponentVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::size_t VectorSet::index_of(const ExponentVector& v) const {
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
  if (it == vectors_.end() || *it != v) return vectors_.size();
  return static_cast<std::size_t>(it - vectors_.begin());
}

bool VectorSet::is_subset_of(const VectorSet& other) const {
  return std::includes(other.vectors_.begin(), other.vectors_.end(),
                       vectors_.begin(), vectors_.end());
}

bool VectorSet::is_zero_one() const {
  return std::all_of(vectors_.begin(), vectors_.end(),
                     [](const ExponentVector& v) { return troplab::is_zero_one(v); });
}

bool VectorSet::is_antichain() const {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    for (std::size_t j = 0; j < vectors_.size(); ++j) {
      if (i != j && leq(vectors_[i], vectors_[j])) return false;
    }
  }
  return true;
}

VectorSet set_union(const VectorSet& a, const VectorSet& b) {
  if (a.arity() != b.arity()) throw PreconditionError("union: arity mismatch");
  std::vector<ExponentVector> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VectorSet(a.arity(), std::move(out));
}

VectorSet minkowski_sum(const VectorSet& a, const VectorSet& b,
                        std::size_t limit) {
  if (a.arity() != b.arity()) {
    throw PreconditionError("Minkowski sum: arity mismatch");
  }
  std::unordered_set<ExponentVector, VectorHash> sums;
  for (const auto& x : a) {
    for (const auto& y : b) {
      sums.insert(add(x, y));
      if (sums.size() > limit) {
        throw ResourceError("Minkowski sum exceeds " + std::to_string(limit) +
                            " vectors");
      }
    }
  }
  return VectorSet(a.arity(), std::vector<ExponentVector>(sums.begin(), sums.end()));
}

namespace {

VectorSet extremal_elements(const VectorSet& set, bool keep_minimal) {
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < set.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = keep_minimal ? leq(set[j], set[i]) : leq(set[i], set[j]);
    }
    if (!dominated) out.push_back(set[i]);
  }
  return VectorSet(set.arity(), std::move(out));
}

}  // namespace

VectorSet minimal_elements(const VectorSet& set) {
  return extremal_elements(set, true);
}

VectorSet maximal_elements(const VectorSet& set) {
  return extremal_elements(set, false);
}

}  // namespace troplab
