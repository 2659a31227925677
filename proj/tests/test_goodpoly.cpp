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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "lrc/error.hpp"
#include "lrc/goodpoly.hpp"

namespace lrc {
namespace {

Element E(std::uint32_t v) { return Element{v}; }

std::vector<Element> Es(std::initializer_list<std::uint32_t> vs) {
  std::vector<Element> out;
  for (auto v : vs) out.push_back(E(v));
  return out;
}

template <typename F>
void expect_errc(F&& f, Errc code) {
  try {
    f();
    FAIL() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(SubgroupTest, MultiplicativeMatchesRootsOfUnity) {
  const GaloisField F(13);
  const auto H = find_subgroup(F, 4);
  EXPECT_EQ(H.kind, SubgroupKind::Multiplicative);
  EXPECT_EQ(H.elements, Es({1, 5, 8, 12}));
  // Exhaustive: y^4 = 1 by repeated multiplication.
  std::vector<Element> roots;
  for (std::uint32_t y = 1; y < 13; ++y)
    if (y * y % 13 * y % 13 * y % 13 == 1) roots.push_back(E(y));
  EXPECT_EQ(H.elements, roots);
}

TEST(SubgroupTest, AdditiveSpan) {
  const GaloisField F(16);
  const auto H = find_subgroup(F, 4);
  EXPECT_EQ(H.kind, SubgroupKind::Additive);
  EXPECT_EQ(H.elements, Es({0, 1, 2, 3}));
  for (Element a : H.elements)
    for (Element b : H.elements)
      EXPECT_TRUE(std::binary_search(H.elements.begin(), H.elements.end(), F.add(a, b)));
}

TEST(SubgroupTest, PathSelection) {
  EXPECT_EQ(find_subgroup(GaloisField(256), 3).kind, SubgroupKind::Multiplicative);
  EXPECT_EQ(find_subgroup(GaloisField(16), 5).kind, SubgroupKind::Multiplicative);
  EXPECT_EQ(find_subgroup(GaloisField(17), 4).kind, SubgroupKind::Multiplicative);
  EXPECT_EQ(find_subgroup(GaloisField(4), 2).kind, SubgroupKind::Additive);
  EXPECT_EQ(find_subgroup(GaloisField(2), 2).kind, SubgroupKind::Additive);
}

TEST(SubgroupTest, NoSubgroup) {
  expect_errc([] { find_subgroup(GaloisField(13), 5); }, Errc::NoSubgroup);
  expect_errc([] { find_subgroup(GaloisField(17), 3); }, Errc::NoSubgroup);
}

TEST(CosetPartitionTest, MultiplicativeCosets) {
  const GaloisField F(13);
  const auto H = find_subgroup(F, 4);
  const auto blocks = coset_partition(F, H, 3);
  ASSERT_EQ(blocks.size(), 3U);
  EXPECT_EQ(blocks[0], Es({1, 5, 8, 12}));
  EXPECT_EQ(blocks[1], Es({2, 3, 10, 11}));
  EXPECT_EQ(blocks[2], Es({4, 6, 7, 9}));
  // Oracle: representative times H, reduced.
  for (std::uint32_t rep : {1U, 2U, 4U}) {
    std::vector<Element> coset;
    for (auto h : {1U, 5U, 8U, 12U}) coset.push_back(E(rep * h % 13));
    std::sort(coset.begin(), coset.end());
    EXPECT_NE(std::find(blocks.begin(), blocks.end(), coset), blocks.end());
  }
  expect_errc([&] { coset_partition(F, H, 4); }, Errc::TooManyBlocks);
}

TEST(CosetPartitionTest, AdditiveCosetsCoverTheField) {
  const GaloisField F(16);
  const auto blocks = coset_partition(F, find_subgroup(F, 4), 4);
  std::set<Element> all;
  for (const auto& b : blocks) {
    EXPECT_EQ(b.size(), 4U);
    all.insert(b.begin(), b.end());
  }
  EXPECT_EQ(all.size(), 16U);
  for (std::size_t i = 1; i < blocks.size(); ++i) EXPECT_LT(blocks[i - 1].front(), blocks[i].front());
}

TEST(GoodPolynomialTest, Multiplicative) {
  const GaloisField F(13);
  const auto H = find_subgroup(F, 4);
  const Polynomial g = good_polynomial(F, H);
  EXPECT_EQ(g, Polynomial({0, 0, 0, 0, 1}));
  for (Element h : H.elements) EXPECT_EQ(poly_eval(F, g, h), E(1));
}

TEST(GoodPolynomialTest, AdditiveSubspaceAnnihilator) {
  const GaloisField F(16);
  const auto H = find_subgroup(F, 4);
  const Polynomial g = good_polynomial(F, H);
  // X^4 + (x^2+x+1) X^2 + (x^2+x) X
  EXPECT_EQ(g, Polynomial({0, 0b110, 0b111, 0, 1}));
  for (Element h : H.elements) EXPECT_EQ(poly_eval(F, g, h), E(0));
  for (const auto& block : coset_partition(F, H, 4)) {
    const Element v = poly_eval(F, g, block.front());
    for (Element x : block) EXPECT_EQ(poly_eval(F, g, x), v);
  }
}

TEST(NormalizeGammaTest, ShiftsLastBlockToZero) {
  const GaloisField F(13);
  PartitionSpec partition;
  partition.blocks = coset_partition(F, find_subgroup(F, 4), 3);
  const auto good = normalize_gamma(F, Polynomial({0, 0, 0, 0, 1}), partition);
  EXPECT_EQ(good.gamma, E(9));
  EXPECT_EQ(good.normalized, Polynomial({4, 0, 0, 0, 1}));
  EXPECT_EQ(good.block_values, Es({5, 7, 0}));
  // Oracle: x^4 - 9 on every coset element.
  for (std::size_t b = 0; b < 3; ++b)
    for (Element x : partition.blocks[b]) {
      const std::uint32_t v = x.value();
      EXPECT_EQ((v * v % 13 * v % 13 * v % 13 + 13 - 9) % 13, good.block_values[b].value());
    }
}

TEST(NormalizeGammaTest, FixedPointWhenAlreadyZero) {
  const GaloisField F(13);
  PartitionSpec partition;
  partition.blocks = coset_partition(F, find_subgroup(F, 4), 3);
  const Polynomial g{4, 0, 0, 0, 1};
  const auto good = normalize_gamma(F, g, partition);
  EXPECT_EQ(good.gamma, E(0));
  EXPECT_EQ(good.normalized, g);
}

TEST(NormalizeGammaTest, RejectsNonCosetBlock) {
  const GaloisField F(13);
  PartitionSpec partition;
  partition.blocks = {Es({1, 5, 8, 12}), Es({2, 3, 4, 6})};
  expect_errc([&] { normalize_gamma(F, Polynomial({0, 0, 0, 0, 1}), partition); },
              Errc::NotConstantOnBlocks);
}

TEST(GoodPolynomialTest, DeterministicAcrossCalls) {
  for (std::uint32_t q : {13U, 16U, 17U, 64U}) {
    const GaloisField F(q);
    for (std::size_t size : {2U, 3U, 4U}) {
      try {
        const auto H1 = find_subgroup(F, size), H2 = find_subgroup(F, size);
        EXPECT_EQ(H1.elements, H2.elements);
        const std::size_t m = coset_capacity(F, H1.kind) / size;
        EXPECT_EQ(coset_partition(F, H1, m), coset_partition(F, H2, m));
        EXPECT_EQ(good_polynomial(F, H1), good_polynomial(F, H2));
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NoSubgroup);
      }
    }
  }
}

}  // namespace
}  // namespace lrc
