// Copyright 2026 The lrc-shorten Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace lrc {

/// A field element in canonical integer form. For GF(p) this is the residue
/// in [0, p); for GF(2^e) bit i is the coefficient of x^i.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint32_t value_ = 0;
};

/// GF(p) for a prime p < 2^16, or GF(2^e) for 2 <= e <= 16.
///
/// Extension fields use the numerically smallest irreducible modulus of
/// degree e, so a given order always yields the same field. Multiplication
/// is carry-less product followed by reduction; no tables are built.
class GaloisField {
 public:
  /// Throws Errc::NotAPrimePower or Errc::UnsupportedField.
  explicit GaloisField(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return characteristic_; }
  unsigned extension_degree() const { return extension_degree_; }
  /// Bit mask of the reduction polynomial, including the x^e term.
  std::optional<std::uint32_t> modulus() const { return modulus_; }

  /// Validating constructor for untrusted input.
  Element element(std::uint64_t value) const;
  bool contains(Element a) const { return a.value() < order_; }

  static constexpr Element zero() { return Element{0}; }
  static constexpr Element one() { return Element{1}; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws Errc::DivisionByZero for a = 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// a^0 = 1, including 0^0.
  Element pow(Element a, std::uint64_t exponent) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(Element a) const;
  /// Smallest integer-encoded generator of the multiplicative group.
  Element primitive_element() const;

  /// All q elements in canonical order.
  std::vector<Element> elements() const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.order_ == b.order_;
  }

 private:
  std::uint32_t order_;
  std::uint32_t characteristic_;
  unsigned extension_degree_;
  std::optional<std::uint32_t> modulus_;
};

/// Irreducibility over GF(2) of the polynomial with coefficient mask `poly`,
/// by trial division with every polynomial of degree 1..deg/2.
bool is_irreducible_gf2(std::uint32_t poly);

/// Numerically smallest irreducible polynomial of the given degree over GF(2).
std::uint32_t smallest_irreducible_gf2(unsigned degree);

bool is_prime(std::uint64_t value);

}  // namespace lrc
