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


#include "troplab/bounds.hpp"

#include <gmpxx.h>

#include "troplab/error.hpp"
#include "troplab/field.hpp"

namespace troplab {
namespace {

Integer power(std::uint32_t base, std::uint64_t exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

std::uint32_t to_u32(const Integer& v) { return static_cast<std::uint32_t>(v.get_ui()); }

}  // namespace

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

DesignBound design_bound(std::uint32_t m, std::uint32_t d, const Rational& beta) {
  if (m < 2) throw PreconditionError("bound design: need m >= 2");
  if (!FiniteField::supported_order(m)) {
    throw PreconditionError("bound design: m must be a supported prime power");
  }
  if (d < 1 || d >= m) throw PreconditionError("bound design: need 1 <= d < m");
  if (beta < Rational(1, d + 1) || beta >= Rational(1)) {
    throw PreconditionError("bound design: need 1/(d+1) <= beta < 1");
  }
  DesignBound out;
  out.m = m;
  out.d = d;
  out.beta = beta;
  out.l = beta * Rational(d) / Rational(2);
  out.l_ceil = to_u32(out.l.ceil());
  out.l_floor = to_u32(out.l.floor());
  out.family_size = power(m, d);
  out.degree_ceil = power(m, d - out.l_ceil);
  out.degree_floor = power(m, d - out.l_floor);
  out.bound = out.family_size / out.degree_ceil;
  out.bound_floor = out.family_size / out.degree_floor;
  out.factor = (Rational(1) - beta) * Rational(m) / Rational(d);
  return out;
}

MatchingBound matching_bound(std::uint32_t m, std::uint32_t k, const Rational& r) {
  if (m < 1 || k < 2) throw PreconditionError("bound matching: need m >= 1 and k >= 2");
  if (k > 62) throw PreconditionError("bound matching: k too large");
  if (r < Rational(1)) throw PreconditionError("bound matching: need r >= 1");
  if (r * Rational(9) > Rational(std::int64_t{1} << k)) {
    throw PreconditionError("bound matching: need r <= 2^k / 9");
  }
  MatchingBound out;
  out.m = m;
  out.k = k;
  out.r = r;
  out.d = to_u32((Rational(m) / (Rational(3) * r)).ceil());
  if (2 * out.d > m) throw PreconditionError("bound matching: need 2d <= m");
  Integer c;
  mpz_pow_ui(c.get_mpz_t(), binomial(2 * out.d, out.d).get_mpz_t(), k - 1);
  out.numerator = c;
  out.denominator = binomial(m, 2 * out.d);
  out.bound = Rational(out.numerator, out.denominator);
  return out;
}

CountingBound counting_bound(std::uint32_t n) {
  if (n < 1 || n > kMaxCountingArity) {
    throw PreconditionError("bound counting: need 1 <= n <= " +
                            std::to_string(kMaxCountingArity));
  }
  CountingBound out;
  out.n = n;
  Integer cube = Integer(n) * n * n;
  out.t = power(2, n) / cube;
  const unsigned long t = out.t.get_ui();
  out.middle_binomial = binomial(n, n / 2);
  out.log2_m = Rational(out.middle_binomial, Integer(n));

  Integer l = power(2, t);
  Integer base;
  mpz_pow_ui(base.get_mpz_t(), Integer(t + n).get_mpz_t(), 2 * t);
  l *= base;
  out.log2_l_floor = mpz_sizeinbase(l.get_mpz_t(), 2) - 1;

  const unsigned long c = out.middle_binomial.get_ui();
  Integer ln;
  mpz_pow_ui(ln.get_mpz_t(), l.get_mpz_t(), n);
  const std::size_t bits = mpz_sizeinbase(ln.get_mpz_t(), 2);
  // x < 2^c iff x has at most c bits; (2L)^n = 2^n L^n.
  out.l_below_m = bits <= c;
  const bool power_of_two = mpz_scan1(ln.get_mpz_t(), 0) == bits - 1;
  const std::size_t double_bits = bits + n;
  out.double_l_below_m = double_bits <= c || (double_bits == c + 1 && power_of_two);
  return out;
}

}  // namespace troplab
