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

#include "lrc/field.hpp"

#include <bit>
#include <string>

#include "lrc/error.hpp"

namespace lrc {
namespace {

constexpr unsigned kMaxExtensionDegree = 16;

unsigned gf2_degree(std::uint32_t poly) {
  return static_cast<unsigned>(std::bit_width(poly)) - 1;
}

std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) {
  const unsigned db = gf2_degree(b);
  while (a != 0 && gf2_degree(a) >= db) a ^= b << (gf2_degree(a) - db);
  return a;
}

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t wide = a;
  while (b != 0) {
    if (b & 1U) acc ^= wide;
    wide <<= 1;
    b >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

bool is_irreducible_gf2(std::uint32_t poly) {
  if (poly < 2) return false;
  const unsigned deg = gf2_degree(poly);
  if (deg == 1) return true;
  // Every degree-(<= deg/2) polynomial, which also covers the linear factors
  // x and x+1 (i.e. the roots 0 and 1).
  for (std::uint32_t d = 2; gf2_degree(d) <= deg / 2; ++d)
    if (gf2_mod(poly, d) == 0) return false;
  return true;
}

std::uint32_t smallest_irreducible_gf2(unsigned degree) {
  for (std::uint32_t p = 1U << degree; p < (2U << degree); ++p)
    if (is_irreducible_gf2(p)) return p;
  throw Error(Errc::InternalInconsistency, "no irreducible polynomial of degree " +
                                               std::to_string(degree));
}

GaloisField::GaloisField(std::uint32_t order) : order_(order) {
  if (is_prime(order)) {
    if (order > (1U << kMaxExtensionDegree))
      throw Error(Errc::UnsupportedField,
                  "prime order " + std::to_string(order) + " exceeds 2^16");
    characteristic_ = order;
    extension_degree_ = 1;
    return;
  }
  // Prime power test: strip the smallest prime factor.
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= order; ++d) {
    if (order % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) throw Error(Errc::NotAPrimePower, std::to_string(order) + " is not a prime power");
  unsigned e = 0;
  std::uint32_t rest = order;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw Error(Errc::NotAPrimePower, std::to_string(order) + " is not a prime power");
  if (p != 2 || e > kMaxExtensionDegree)
    throw Error(Errc::UnsupportedField,
                "GF(" + std::to_string(order) +
                    ") unsupported: extension fields are limited to GF(2^e), e <= 16");
  characteristic_ = 2;
  extension_degree_ = e;
  modulus_ = smallest_irreducible_gf2(e);
}

Element GaloisField::element(std::uint64_t value) const {
  if (value >= order_)
    throw Error(Errc::InvalidElement, "symbol " + std::to_string(value) +
                                          " is not an element of GF(" +
                                          std::to_string(order_) + ")");
  return Element{static_cast<std::uint32_t>(value)};
}

Element GaloisField::add(Element a, Element b) const {
  if (characteristic_ == 2) return Element{a.value() ^ b.value()};
  const std::uint32_t s = a.value() + b.value();
  return Element{s >= order_ ? s - order_ : s};
}

Element GaloisField::sub(Element a, Element b) const { return add(a, neg(b)); }

Element GaloisField::neg(Element a) const {
  if (characteristic_ == 2 || a.is_zero()) return a;
  return Element{order_ - a.value()};
}

Element GaloisField::mul(Element a, Element b) const {
  if (!modulus_) {
    return Element{static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.value()) * b.value()) % order_)};
  }
  std::uint64_t product = clmul(a.value(), b.value());
  const std::uint64_t mod = *modulus_;
  for (unsigned bit = 2 * extension_degree_; bit-- > extension_degree_;)
    if (product & (std::uint64_t{1} << bit)) product ^= mod << (bit - extension_degree_);
  return Element{static_cast<std::uint32_t>(product)};
}

Element GaloisField::inv(Element a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(a, order_ - 2);
}

Element GaloisField::pow(Element a, std::uint64_t exponent) const {
  Element result = one();
  Element base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::uint32_t GaloisField::multiplicative_order(Element a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "zero has no multiplicative order");
  std::uint32_t ord = 1;
  for (Element x = a; x != one(); x = mul(x, a)) ++ord;
  return ord;
}

Element GaloisField::primitive_element() const {
  if (order_ == 2) return one();
  for (std::uint32_t v = 2; v < order_; ++v)
    if (multiplicative_order(Element{v}) == order_ - 1) return Element{v};
  throw Error(Errc::InternalInconsistency, "no primitive element found");
}

std::vector<Element> GaloisField::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (std::uint32_t v = 0; v < order_; ++v) out.emplace_back(v);
  return out;
}

}  // namespace lrc
