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

#include "lrc/polynomial.hpp"

#include <algorithm>
#include <string>

#include "lrc/error.hpp"

namespace lrc {

Polynomial::Polynomial(std::vector<Element> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<std::uint32_t> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (auto c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::monomial(Element c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial{std::move(coeffs)};
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial poly_add(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  std::vector<Element> out(std::max(ca.size(), cb.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return Polynomial{std::move(out)};
}

Polynomial poly_sub(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
  return poly_add(F, a, poly_scale(F, b, F.neg(F.one())));
}

Polynomial poly_scale(const GaloisField& F, const Polynomial& a, Element c) {
  std::vector<Element> out(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : out) x = F.mul(x, c);
  return Polynomial{std::move(out)};
}

Polynomial poly_mul(const GaloisField& F, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  std::vector<Element> out(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; j < cb.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(ca[i], cb[j]));
  }
  return Polynomial{std::move(out)};
}

Polynomial poly_pow(const GaloisField& F, const Polynomial& a, std::size_t exponent) {
  Polynomial result = Polynomial::constant(F.one());
  for (std::size_t i = 0; i < exponent; ++i) result = poly_mul(F, result, a);
  return result;
}

Element poly_eval(const GaloisField& F, const Polynomial& p, Element x) {
  Element acc{};
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

Polynomial annihilator(const GaloisField& F, std::span<const Element> roots) {
  Polynomial h = Polynomial::constant(F.one());
  for (Element beta : roots) h = poly_mul(F, h, Polynomial{std::vector<Element>{F.neg(beta), F.one()}});
  return h;
}

Polynomial lagrange_interpolate(const GaloisField& F,
                                std::span<const std::pair<Element, Element>> points) {
  if (points.empty()) throw Error(Errc::LengthMismatch, "interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw Error(Errc::DuplicateAbscissa,
                    "duplicate abscissa " + std::to_string(points[i].first.value()));

  std::vector<Element> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.first);
  const Polynomial full = annihilator(F, xs);

  Polynomial result;
  for (const auto& [xi, yi] : points) {
    if (yi.is_zero()) continue;
    // full / (x - xi) by synthetic division.
    const auto c = full.coefficients();
    std::vector<Element> quotient(c.size() - 1);
    Element carry{};
    for (std::size_t d = c.size() - 1; d-- > 0;) {
      carry = F.add(c[d + 1], F.mul(carry, xi));
      quotient[d] = carry;
    }
    Polynomial basis{std::move(quotient)};
    const Element denom = poly_eval(F, basis, xi);
    result = poly_add(F, result, poly_scale(F, basis, F.div(yi, denom)));
  }
  return result;
}

}  // namespace lrc
