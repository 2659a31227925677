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
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

/// Polynomial degree with an explicit minus-infinity for the zero polynomial.
/// Minus infinity compares below every finite degree and absorbs addition.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree{}; }
  constexpr explicit Degree(std::size_t d) : value_(d) {}

  constexpr bool is_minus_infinity() const { return !value_.has_value(); }
  /// Precondition: finite.
  constexpr std::size_t value() const { return *value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    return Degree{*a.value_ + *b.value_};
  }
  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, std::size_t b) { return a == Degree{b}; }
  friend constexpr std::strong_ordering operator<=>(Degree a, std::size_t b) {
    return a <=> Degree{b};
  }

 private:
  constexpr Degree() = default;
  std::optional<std::size_t> value_;
};

/// Univariate polynomial over a GaloisField, lowest degree first, with the
/// leading coefficient nonzero. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coefficients);
  Polynomial(std::initializer_list<std::uint32_t> coefficients);

  static Polynomial constant(Element c) { return Polynomial{std::vector<Element>{c}}; }
  static Polynomial monomial(Element c, std::size_t degree);

  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree{coeffs_.size() - 1};
  }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  std::span<const Element> coefficients() const { return coeffs_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Element> coeffs_;
};

Polynomial poly_add(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const GaloisField& F, const Polynomial& a, Element c);
Polynomial poly_mul(const GaloisField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const GaloisField& F, const Polynomial& a, std::size_t exponent);

/// Horner evaluation.
Element poly_eval(const GaloisField& F, const Polynomial& p, Element x);

/// Monic polynomial whose roots are exactly `roots`; 1 for an empty set.
Polynomial annihilator(const GaloisField& F, std::span<const Element> roots);

/// Unique polynomial of degree < points.size() through every (x, y).
/// Throws Errc::DuplicateAbscissa or Errc::LengthMismatch (empty input).
Polynomial lagrange_interpolate(const GaloisField& F,
                                std::span<const std::pair<Element, Element>> points);

}  // namespace lrc
