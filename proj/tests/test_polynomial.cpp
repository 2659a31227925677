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

#include <random>

#include <gtest/gtest.h>

#include "lrc/error.hpp"
#include "lrc/polynomial.hpp"
#include "oracles.hpp"

namespace lrc {
namespace {

Element E(std::uint32_t v) { return Element{v}; }

Polynomial random_poly(const GaloisField& F, std::size_t len, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
  std::vector<Element> c(len);
  for (auto& x : c) x = E(pick(rng));
  return Polynomial{c};
}

TEST(DegreeTest, MinusInfinityOrdersBelowAndAbsorbs) {
  const auto ninf = Degree::minus_infinity();
  EXPECT_LT(ninf, Degree{0});
  EXPECT_EQ(ninf + Degree{5}, ninf);
  EXPECT_EQ(Degree{2} + Degree{3}, Degree{5});
  EXPECT_TRUE(Polynomial{}.degree().is_minus_infinity());
  EXPECT_EQ(Polynomial({0, 0, 0}).degree(), ninf);
  EXPECT_EQ(Polynomial({1, 2, 0}).degree(), 1U);
}

TEST(PolynomialTest, EvalExamples) {
  const GaloisField F(13);
  const Polynomial h{11, 10, 1};
  EXPECT_EQ(poly_eval(F, Polynomial{}, E(5)), E(0));
  EXPECT_EQ(poly_eval(F, h, E(1)), E(oracle::eval_mod_p({11, 10, 1}, 1, 13)));
  EXPECT_EQ(poly_eval(F, h, E(1)), E(9));
  EXPECT_EQ(poly_eval(F, h, E(7)), E(0));
  for (std::uint32_t x = 0; x < 13; ++x)
    EXPECT_EQ(poly_eval(F, h, E(x)).value(), oracle::eval_mod_p({11, 10, 1}, x, 13));
}

TEST(PolynomialTest, MulExamples) {
  const GaloisField F(13);
  const Polynomial a{3, 0, 5};
  EXPECT_EQ(poly_mul(F, a, Polynomial{1}), a);
  EXPECT_TRUE(poly_mul(F, a, Polynomial{}).is_zero());
  // (x - 7)(x - 9)
  const Polynomial product = poly_mul(F, Polynomial{6, 1}, Polynomial{4, 1});
  EXPECT_EQ(product, Polynomial({11, 10, 1}));
  const auto expanded = oracle::expand_roots_mod_p({7, 9}, 13);
  EXPECT_EQ(product, Polynomial({expanded[0], expanded[1], expanded[2]}));
  const std::vector<Element> roots{E(7), E(9)};
  EXPECT_EQ(annihilator(F, roots), product);
  EXPECT_EQ(annihilator(F, {}), Polynomial{1});
}

TEST(PolynomialTest, DegreeAdditivity) {
  std::mt19937 rng(3);
  for (std::uint32_t q : {13U, 16U}) {
    const GaloisField F(q);
    for (int i = 0; i < 500; ++i) {
      const auto a = random_poly(F, 1 + rng() % 8, rng);
      const auto b = random_poly(F, 1 + rng() % 8, rng);
      if (a.is_zero() || b.is_zero()) continue;
      EXPECT_EQ(poly_mul(F, a, b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(PolynomialTest, InterpolationExamples) {
  const GaloisField F(13);
  const std::vector<std::pair<Element, Element>> one{{E(0), E(7)}};
  EXPECT_EQ(lagrange_interpolate(F, one), Polynomial{7});

  const std::vector<std::pair<Element, Element>> pts{{E(6), E(3)}, {E(7), E(0)}, {E(9), E(0)}};
  const Polynomial p = lagrange_interpolate(F, pts);
  EXPECT_EQ(p, Polynomial({11, 10, 1}));
  for (const auto& [x, y] : pts) EXPECT_EQ(poly_eval(F, p, x), y);

  const std::vector<std::pair<Element, Element>> dup{{E(2), E(1)}, {E(2), E(3)}};
  try {
    lagrange_interpolate(F, dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateAbscissa);
  }
}

TEST(PolynomialTest, InterpolationRoundTrip) {
  std::mt19937 rng(11);
  for (std::uint32_t q : {13U, 16U, 17U, 256U}) {
    const GaloisField F(q);
    for (int trial = 0; trial < 250; ++trial) {
      const std::size_t count = 1 + rng() % std::min<std::uint32_t>(q, 12);
      const Polynomial p = random_poly(F, count, rng);
      std::vector<std::pair<Element, Element>> samples;
      std::vector<std::uint32_t> xs(q);
      for (std::uint32_t i = 0; i < q; ++i) xs[i] = i;
      std::shuffle(xs.begin(), xs.end(), rng);
      for (std::size_t i = 0; i < count; ++i) samples.emplace_back(E(xs[i]), poly_eval(F, p, E(xs[i])));
      ASSERT_EQ(lagrange_interpolate(F, samples), p);
    }
  }
}

TEST(PolynomialTest, PowAndSub) {
  const GaloisField F(13);
  const Polynomial g{4, 0, 0, 0, 1};
  EXPECT_EQ(poly_pow(F, g, 2), poly_mul(F, g, g));
  EXPECT_EQ(poly_pow(F, g, 0), Polynomial{1});
  EXPECT_TRUE(poly_sub(F, g, g).is_zero());
}

}  // namespace
}  // namespace lrc
