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

#include "troplab/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "troplab/error.hpp"

namespace troplab {
namespace {

struct ModulusEntry {
  std::uint32_t p;
  std::uint32_t k;
  std::vector<std::uint32_t> coeffs;  // low degree first, monic
};

// Conway polynomials (Lübeck's tables), coefficients listed from x^0 up to
// the leading 1. Only fields with at most 2^16 elements are listed.
const std::vector<ModulusEntry>& modulus_table() {
  static const std::vector<ModulusEntry> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 14, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {2, 15, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 1, 4, 0, 1}},
      {5, 5, {3, 4, 0, 0, 0, 1}},
      {5, 6, {2, 0, 1, 4, 1, 0, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {7, 4, {3, 4, 5, 0, 1}},
      {7, 5, {4, 1, 0, 0, 0, 1}},
  };
  return table;
}

const ModulusEntry* find_entry(std::uint32_t p, std::uint32_t k) {
  for (const auto& e : modulus_table()) {
    if (e.p == p && e.k == k) return &e;
  }
  return nullptr;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k,
                         std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), order_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k; ++i) order_ *= p;
}

bool FiniteField::supported(std::uint32_t p, std::uint32_t k) {
  return find_entry(p, k) != nullptr;
}

bool FiniteField::supported_order(std::uint32_t q) {
  for (const auto& e : modulus_table()) {
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < e.k; ++i) order *= e.p;
    if (order == q) return true;
  }
  return false;
}

std::shared_ptr<const FiniteField> FiniteField::get(std::uint32_t p,
                                                    std::uint32_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::shared_ptr<const FiniteField>>
      interned;
  const ModulusEntry* entry = find_entry(p, k);
  if (entry == nullptr) {
    throw PreconditionError("field: unsupported GF(" + std::to_string(p) + "^" +
                            std::to_string(k) + ")");
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = interned[{p, k}];
  if (!slot) slot = std::make_shared<const FiniteField>(p, k, entry->coeffs);
  return slot;
}

std::shared_ptr<const FiniteField> FiniteField::of_order(std::uint32_t q) {
  for (const auto& e : modulus_table()) {
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < e.k; ++i) order *= e.p;
    if (order == q) return get(e.p, e.k);
  }
  throw PreconditionError("field: no supported field of order " +
                          std::to_string(q));
}

FieldElement FiniteField::zero() const { return element(0); }
FieldElement FiniteField::one() const { return element(1); }

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= order_) {
    throw PreconditionError("field: element index out of range");
  }
  std::vector<std::uint32_t> coeffs(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    coeffs[i] = index % p_;
    index /= p_;
  }
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FiniteField::from_coefficients(
    std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() != k_) {
    throw PreconditionError("field: coefficient vector has wrong length");
  }
  for (auto c : coeffs) {
    if (c >= p_) throw PreconditionError("field: coefficient out of range");
  }
  return FieldElement(shared_from_this(), std::move(coeffs));
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> all;
  all.reserve(order_);
  for (std::uint32_t i = 0; i < order_; ++i) all.push_back(element(i));
  return all;
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (field_ != other.field_) {
    throw PreconditionError("field: operands from different fields");
  }
}

std::uint32_t FieldElement::index() const {
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    idx = idx * field_->characteristic() + coeffs_[i];
  }
  return idx;
}

bool FieldElement::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  require_same_field(other);
  const std::uint32_t p = field_->characteristic();
  std::vector<std::uint32_t> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (coeffs_[i] + other.coeffs_[i]) % p;
  }
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  const std::uint32_t p = field_->characteristic();
  std::vector<std::uint32_t> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (p - coeffs_[i]) % p;
  }
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  require_same_field(other);
  const std::uint64_t p = field_->characteristic();
  const std::size_t k = coeffs_.size();
  const auto& mod = field_->modulus();
  // Schoolbook product, then reduce from the top using the monic modulus.
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{coeffs_[i]} * other.coeffs_[j]) % p;
    }
  }
  for (std::size_t deg = prod.size(); deg-- > k;) {
    const std::uint64_t lead = prod[deg];
    if (lead == 0) continue;
    prod[deg] = 0;
    for (std::size_t i = 0; i < k; ++i) {
      // x^deg = x^{deg-k} * x^k and x^k = -(mod_0 + ... + mod_{k-1} x^{k-1}).
      prod[deg - k + i] = (prod[deg - k + i] + lead * ((p - mod[i]) % p)) % p;
    }
  }
  std::vector<std::uint32_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw PreconditionError("field: inverse of zero");
  return pow(field_->order() - 2);
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << field_->characteristic() << "," << field_->degree() << ":[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i];
  }
  os << "]";
  return os.str();
}

FieldElement FieldElement::parse(const std::string& text) {
  const auto comma = text.find(',');
  const auto colon = text.find(':');
  if (comma == std::string::npos || colon == std::string::npos ||
      colon < comma || text.size() < colon + 3 || text[colon + 1] != '[' ||
      text.back() != ']') {
    throw PreconditionError("field: cannot parse element '" + text + "'");
  }
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  try {
    p = static_cast<std::uint32_t>(std::stoul(text.substr(0, comma)));
    k = static_cast<std::uint32_t>(std::stoul(text.substr(comma + 1, colon - comma - 1)));
  } catch (const std::exception&) {
    throw PreconditionError("field: cannot parse element '" + text + "'");
  }
  auto field = FiniteField::get(p, k);
  std::vector<std::uint32_t> coeffs;
  std::string body = text.substr(colon + 2, text.size() - colon - 3);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw PreconditionError("field: cannot parse element '" + text + "'");
    }
  }
  return field->from_coefficients(std::move(coeffs));
}

bool power_map_is_bijective(const FiniteField& field, std::uint64_t exponent) {
  std::vector<bool> hit(field.order(), false);
  for (const auto& z : field.elements()) {
    const std::uint32_t image = z.pow(exponent).index();
    if (hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

}  // namespace troplab
