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

#ifndef TROPLAB_FIELD_HPP_
#define TROPLAB_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace troplab {

class FieldElement;

// GF(p^k) realised as GF(p)[x]/(modulus) with a fixed monic irreducible
// modulus per (p, k), taken from a shipped table of Conway polynomials.
// Descriptors are interned: get(p, k) always returns the same object.
//
// Elements are ordered canonically by their index
//   c_0 + c_1 p + ... + c_{k-1} p^{k-1},
// which is also the enumeration order used by the design generators.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // Throws PreconditionError for unsupported (p, k).
  static std::shared_ptr<const FiniteField> get(std::uint32_t p, std::uint32_t k);
  // Field of order q (a prime power with a table entry).
  static std::shared_ptr<const FiniteField> of_order(std::uint32_t q);
  static bool supported(std::uint32_t p, std::uint32_t k);
  static bool supported_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return order_; }
  // Monic modulus, coefficients low degree first (length k + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coefficients(std::vector<std::uint32_t> coeffs) const;
  std::vector<FieldElement> elements() const;

  FiniteField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
};

// Immutable element of a FiniteField; value semantics.
class FieldElement {
 public:
  const FiniteField& field() const { return *field_; }
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }
  std::uint32_t index() const;
  bool is_zero() const;

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator-() const;
  // Throws PreconditionError on zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // "p,k:[c0,...,c_{k-1}]"
  std::string to_string() const;
  static FieldElement parse(const std::string& text);

 private:
  friend class FiniteField;
  FieldElement(std::shared_ptr<const FiniteField> field,
               std::vector<std::uint32_t> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  void require_same_field(const FieldElement& other) const;

  std::shared_ptr<const FiniteField> field_;
  std::vector<std::uint32_t> coeffs_;
};

// True iff z -> z^e permutes the field (checked by exhaustive enumeration).
bool power_map_is_bijective(const FiniteField& field, std::uint64_t exponent);

}  // namespace troplab

#endif  // TROPLAB_FIELD_HPP_
