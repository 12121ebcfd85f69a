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


#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "support/oracles.hpp"
#include "troplab/error.hpp"
#include "troplab/field.hpp"
#include "troplab/rational.hpp"

namespace troplab {
namespace {

TEST(Rational, FractionArithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(Rational(6, 3).to_string(), "2");
  EXPECT_EQ(Rational(-3, -6), Rational(1, 2));
  EXPECT_EQ((Rational(1) - Rational(1, 10) / Rational(2)).reciprocal(), Rational(20, 19));
}

TEST(Rational, Errors) {
  EXPECT_THROW(Rational(1) / Rational(0), PreconditionError);
  EXPECT_THROW(Rational(0).reciprocal(), PreconditionError);
  EXPECT_THROW(Rational::parse("1/0"), PreconditionError);
  EXPECT_THROW(Rational::parse("abc"), PreconditionError);
  EXPECT_THROW(Rational::parse("1/"), PreconditionError);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational(7, 3).floor(), 2);
  EXPECT_EQ(Rational(7, 3).ceil(), 3);
  EXPECT_EQ(Rational(1, 3).to_decimal(3), "0.333");
  for (const char* s : {"0", "5", "-5/7", "123456789012345678901234567891/2"}) {
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  }
}

TEST(Rational, AgreesWithIndependentNormalization) {
  oracle::Gen gen(7);
  auto check = [](const Rational& r, std::int64_t p, std::int64_t q) {
    const auto [np, nq] = oracle::normalize(p, q);
    ASSERT_EQ(r.numerator(), np);
    ASSERT_EQ(r.denominator(), nq);
  };
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t p1 = static_cast<std::int64_t>(gen.below(2001)) - 1000;
    const std::int64_t q1 = 1 + static_cast<std::int64_t>(gen.below(1000));
    const std::int64_t p2 = static_cast<std::int64_t>(gen.below(2001)) - 1000;
    const std::int64_t q2 = 1 + static_cast<std::int64_t>(gen.below(1000));
    const Rational a(p1, q1);
    const Rational b(p2, q2);
    check(a + b, p1 * q2 + p2 * q1, q1 * q2);
    check(a - b, p1 * q2 - p2 * q1, q1 * q2);
    check(a * b, p1 * p2, q1 * q2);
    if (p2 != 0) check(a / b, p1 * q2, q1 * p2);
    EXPECT_EQ(a < b, p1 * q2 < p2 * q1);
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    std::uint32_t q = p;
    for (std::uint32_t k = 1; q <= 64; ++k, q *= p) {
      if (FiniteField::supported(p, k)) out.emplace_back(p, k);
    }
  }
  return out;
}

TEST(FiniteField, SmallExamples) {
  const auto gf2 = FiniteField::get(2, 1);
  EXPECT_TRUE((gf2->one() + gf2->one()).is_zero());
  const auto gf8 = FiniteField::get(2, 3);
  EXPECT_EQ(gf8->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_TRUE(power_map_is_bijective(*gf8, 3));
  EXPECT_FALSE(power_map_is_bijective(*FiniteField::get(2, 2), 3));
  EXPECT_THROW(gf8->zero().inverse(), PreconditionError);
  EXPECT_THROW(gf8->one() + FiniteField::get(3, 1)->one(), PreconditionError);
  EXPECT_THROW(FiniteField::get(2, 17), PreconditionError);
  EXPECT_THROW(FiniteField::of_order(6), PreconditionError);
}

TEST(FiniteField, ExhaustiveAxiomsUpTo64Elements) {
  const auto fields = small_fields();
  ASSERT_GE(fields.size(), 10u);
  for (auto [p, k] : fields) {
    SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(k));
    const auto field = FiniteField::get(p, k);
    const auto els = field->elements();
    ASSERT_EQ(els.size(), field->order());
    for (const auto& a : els) {
      EXPECT_EQ(a + field->zero(), a);
      EXPECT_EQ(a * field->one(), a);
      EXPECT_TRUE((a + (-a)).is_zero());
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), field->one());
      EXPECT_EQ(FieldElement::parse(a.to_string()), a);
      EXPECT_EQ(field->element(a.index()), a);
      for (const auto& b : els) {
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        for (const auto& c : els) {
          ASSERT_EQ((a * b) * c, a * (b * c));
          ASSERT_EQ((a + b) + c, a + (b + c));
          ASSERT_EQ(a * (b + c), a * b + a * c);
        }
      }
    }
  }
}

TEST(FiniteField, CubeMapBijectivityMatchesGcdTest) {
  for (std::uint32_t m = 1; m <= 9; ++m) {
    const auto field = FiniteField::get(2, m);
    std::set<std::uint32_t> images;
    for (const auto& a : field->elements()) images.insert(a.pow(3).index());
    const bool exhaustive = images.size() == field->order();
    const bool by_gcd = std::gcd(3u, field->order() - 1) == 1;
    EXPECT_EQ(exhaustive, by_gcd) << m;
    EXPECT_EQ(power_map_is_bijective(*field, 3), exhaustive) << m;
    EXPECT_EQ(exhaustive, m % 2 == 1) << m;
  }
}

TEST(FiniteField, PowMatchesRepeatedMultiplication) {
  const auto field = FiniteField::get(3, 3);
  for (const auto& a : field->elements()) {
    auto acc = field->one();
    for (std::uint64_t e = 0; e < 30; ++e) {
      ASSERT_EQ(a.pow(e), acc);
      acc = acc * a;
    }
  }
}

}  // namespace
}  // namespace troplab
