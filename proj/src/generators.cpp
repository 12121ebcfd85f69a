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

#include "troplab/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "troplab/error.hpp"
#include "troplab/field.hpp"

namespace troplab {

std::size_t design_point(const DesignSpec& spec, std::uint32_t a, std::uint32_t b) {
  return static_cast<std::size_t>(a) * spec.m + b;
}

SetFamily polynomial_design(const DesignSpec& spec) {
  if (spec.m < 2 || spec.m > kMaxDesignOrder || !FiniteField::supported_order(spec.m)) {
    throw PreconditionError("polynomial_design: no supported field of order " +
                            std::to_string(spec.m));
  }
  if (spec.d < 1 || spec.d > spec.m) {
    throw PreconditionError("polynomial_design: need 1 <= d <= m");
  }
  const auto field = FiniteField::of_order(spec.m);
  const auto elems = field->elements();
  const std::size_t n = static_cast<std::size_t>(spec.m) * spec.m;
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < spec.d; ++i) count *= spec.m;

  std::vector<ElementSet> sets;
  sets.reserve(count);
  std::vector<std::uint32_t> coeffs(spec.d, 0);  // c_0 most significant
  for (std::size_t p = 0; p < count; ++p) {
    std::size_t rest = p;
    for (std::size_t i = spec.d; i-- > 0;) {
      coeffs[i] = static_cast<std::uint32_t>(rest % spec.m);
      rest /= spec.m;
    }
    ElementSet s(n);
    for (std::uint32_t a = 0; a < spec.m; ++a) {
      // Horner evaluation of sum_i c_i a^i.
      FieldElement value = field->zero();
      for (std::size_t i = spec.d; i-- > 0;) value = value * elems[a] + elems[coeffs[i]];
      s.set(design_point(spec, a, value.index()));
    }
    sets.push_back(std::move(s));
  }
  SetFamily family(n, std::move(sets));
  if (family.size() != count) {
    throw InvariantError("polynomial_design: distinct polynomials share a graph");
  }
  return family;
}

std::size_t max_degree(const SetFamily& f, std::size_t l) {
  if (l == 0) return f.size();
  std::map<std::vector<std::size_t>, std::size_t> counts;
  for (const auto& s : f) {
    const auto elems = elements_of(s);
    if (elems.size() < l) continue;
    std::vector<bool> pick(elems.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(l), true);
    do {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (pick[i]) sub.push_back(elems[i]);
      }
      ++counts[sub];
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::size_t best = 0;
  for (const auto& [sub, c] : counts) best = std::max(best, c);
  return best;
}

SetFamily graham_sloane(std::size_t n, std::size_t m, std::size_t l) {
  if (l >= n || m > n || m == 0) {
    throw PreconditionError("graham_sloane: need 0 <= l < n and 1 <= m <= n");
  }
  std::vector<ElementSet> kept;
  for (const auto& s : all_subsets_of_size(n, m)) {
    std::size_t sum = 0;
    for (auto e : elements_of(s)) sum += e + 1;
    if (sum % n == l) kept.push_back(s);
  }
  return SetFamily(n, std::move(kept));
}

std::size_t graham_sloane_best_residue(std::size_t n, std::size_t m) {
  std::size_t best = 0;
  std::size_t best_size = 0;
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t size = graham_sloane(n, m, l).size();
    if (size > best_size) {
      best = l;
      best_size = size;
    }
  }
  return best;
}

std::size_t hypergraph_edge(const HypergraphSpec& spec,
                            const std::vector<std::uint32_t>& vertices) {
  std::size_t idx = 0;
  for (auto v : vertices) idx = idx * spec.m + v;
  return idx;
}

SetFamily hypergraph_matchings(const HypergraphSpec& spec) {
  if (spec.m < 1 || spec.k < 1) {
    throw PreconditionError("hypergraph_matchings: need m, k >= 1");
  }
  std::uint64_t factorial = 1;
  for (std::uint32_t i = 2; i <= spec.m; ++i) factorial *= i;
  std::uint64_t total = 1;
  std::size_t n = 1;
  for (std::uint32_t j = 0; j < spec.k; ++j) {
    if (n > (std::size_t{1} << 40) / spec.m) {
      throw ResourceError("hypergraph_matchings: ground set too large");
    }
    n *= spec.m;
  }
  for (std::uint32_t j = 1; j < spec.k; ++j) {
    total *= factorial;
    if (total > kMaxMatchings) {
      throw ResourceError("hypergraph_matchings: (m!)^(k-1) exceeds " +
                          std::to_string(kMaxMatchings));
    }
  }
  // Matching = (sigma_2, ..., sigma_k); edge i is (i, sigma_2(i), ...).
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(spec.m);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<ElementSet> sets;
  sets.reserve(total);
  std::vector<std::size_t> choice(spec.k - 1, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t j = choice.size(); j-- > 0;) {
      choice[j] = rest % perms.size();
      rest /= perms.size();
    }
    ElementSet s(n);
    for (std::uint32_t i = 0; i < spec.m; ++i) {
      std::vector<std::uint32_t> edge{i};
      for (auto c : choice) edge.push_back(perms[c][i]);
      s.set(hypergraph_edge(spec, edge));
    }
    sets.push_back(std::move(s));
  }
  return SetFamily(n, std::move(sets));
}

VectorSet sidon_cubic(std::uint32_t m) {
  if (m % 2 == 0) {
    throw PreconditionError("sidon_cubic: m must be odd (the cube map is not a "
                            "bijection of GF(2^m) for even m)");
  }
  if (m < 3 || m > 13) throw PreconditionError("sidon_cubic: need 3 <= m <= 13");
  const auto field = FiniteField::get(2, m);
  const std::size_t n = 4 * static_cast<std::size_t>(m);
  std::vector<ExponentVector> out;
  out.reserve(field->order());
  for (std::uint32_t idx = 0; idx < field->order(); ++idx) {
    const FieldElement a = field->element(idx);
    const FieldElement cube = a.pow(3);
    ExponentVector v(n, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      v[i] = a.coefficients()[i];
      v[m + i] = cube.coefficients()[i];
      v[2 * m + i] = 1 - a.coefficients()[i];
      v[3 * m + i] = 1 - cube.coefficients()[i];
    }
    out.push_back(std::move(v));
  }
  return VectorSet(n, std::move(out));
}

}  // namespace troplab
