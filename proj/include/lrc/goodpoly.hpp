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

#include <cstddef>
#include <string_view>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {

enum class SubgroupKind { Multiplicative, Additive };

std::string_view to_string(SubgroupKind kind);

/// A subgroup H of F^* or of (F, +). Its cosets are the repair-group blocks.
struct SubgroupSpec {
  SubgroupKind kind;
  std::vector<Element> elements;  // sorted

  std::size_t size() const { return elements.size(); }
};

/// Blocks A_1..A_m of equal size, and the points B of the last block that
/// are dropped by shortening.
struct PartitionSpec {
  std::vector<std::vector<Element>> blocks;  // each sorted, ordered by minimum
  std::vector<Element> removed;              // B, sorted, subset of blocks.back()

  std::size_t n_bar() const { return blocks.empty() ? 0 : blocks.size() * blocks.front().size(); }
  /// (A_1 u ... u A_{m-1}) u (A_m \ B), sorted ascending.
  std::vector<Element> evaluation_set() const;
};

/// g(x) constant on every block, shifted so that it vanishes on the last one.
struct GoodPolynomial {
  Polynomial raw;
  Element gamma;                      // value of `raw` on the last block
  Polynomial normalized;              // raw - gamma
  std::vector<Element> block_values;  // value of `normalized` per block; back() == 0
};

/// Number of points the cosets of a subgroup of this kind can cover:
/// q - 1 for multiplicative (0 is never in a coset), q for additive.
std::size_t coset_capacity(const GaloisField& F, SubgroupKind kind);

/// Multiplicative subgroup when size | q-1, otherwise the additive span of
/// {1, x, ..., x^(a-1)} when p = 2 and size = 2^a. Throws Errc::NoSubgroup.
SubgroupSpec find_subgroup(const GaloisField& F, std::size_t size);

/// The first m cosets of H in order of their minimum element.
/// Throws Errc::TooManyBlocks.
std::vector<std::vector<Element>> coset_partition(const GaloisField& F, const SubgroupSpec& H,
                                                  std::size_t m);

/// x^|H| for a multiplicative subgroup, prod_{h in H} (x - h) for an additive
/// one. Either is constant on every coset of H.
Polynomial good_polynomial(const GaloisField& F, const SubgroupSpec& H);

/// Throws Errc::NotConstantOnBlocks if g takes two values on some block.
GoodPolynomial normalize_gamma(const GaloisField& F, const Polynomial& g,
                               const PartitionSpec& partition);

}  // namespace lrc
