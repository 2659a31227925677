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

#include "lrc/goodpoly.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lrc/error.hpp"

namespace lrc {

std::string_view to_string(SubgroupKind kind) {
  return kind == SubgroupKind::Multiplicative ? "multiplicative" : "additive";
}

std::vector<Element> PartitionSpec::evaluation_set() const {
  std::vector<Element> points;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element x : blocks[b]) {
      if (b + 1 == blocks.size() && std::binary_search(removed.begin(), removed.end(), x)) continue;
      points.push_back(x);
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

std::size_t coset_capacity(const GaloisField& F, SubgroupKind kind) {
  return kind == SubgroupKind::Multiplicative ? F.order() - 1 : F.order();
}

SubgroupSpec find_subgroup(const GaloisField& F, std::size_t size) {
  const std::uint32_t q = F.order();
  if (size >= 2 && (q - 1) % size == 0) {
    const Element generator = F.pow(F.primitive_element(), (q - 1) / size);
    SubgroupSpec H{SubgroupKind::Multiplicative, {}};
    Element x = F.one();
    for (std::size_t i = 0; i < size; ++i) {
      H.elements.push_back(x);
      x = F.mul(x, generator);
    }
    std::sort(H.elements.begin(), H.elements.end());
    return H;
  }
  if (size >= 2 && F.characteristic() == 2 && std::has_single_bit(size) && size <= q) {
    // Span of {1, x, ..., x^(a-1)} is exactly the integers [0, 2^a).
    SubgroupSpec H{SubgroupKind::Additive, {}};
    for (std::uint32_t v = 0; v < size; ++v) H.elements.emplace_back(v);
    return H;
  }
  throw Error(Errc::NoSubgroup, "GF(" + std::to_string(q) + ") has no subgroup of size " +
                                    std::to_string(size) + " with the coset structure needed");
}

std::vector<std::vector<Element>> coset_partition(const GaloisField& F, const SubgroupSpec& H,
                                                  std::size_t m) {
  const std::size_t capacity = coset_capacity(F, H.kind);
  if (m * H.size() > capacity)
    throw Error(Errc::TooManyBlocks, std::to_string(m) + " cosets of size " +
                                         std::to_string(H.size()) + " need more than the " +
                                         std::to_string(capacity) + " available points");

  std::vector<bool> covered(F.order(), false);
  std::vector<std::vector<Element>> blocks;
  const std::uint32_t first = H.kind == SubgroupKind::Multiplicative ? 1 : 0;
  // Scanning in ascending order makes each representative its coset's minimum.
  for (std::uint32_t v = first; v < F.order() && blocks.size() < m; ++v) {
    if (covered[v]) continue;
    std::vector<Element> coset;
    coset.reserve(H.size());
    for (Element h : H.elements) {
      const Element x = H.kind == SubgroupKind::Multiplicative ? F.mul(Element{v}, h)
                                                               : F.add(Element{v}, h);
      covered[x.value()] = true;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    blocks.push_back(std::move(coset));
  }
  if (blocks.size() < m) throw Error(Errc::TooManyBlocks, "coset space exhausted");
  return blocks;
}

Polynomial good_polynomial(const GaloisField& F, const SubgroupSpec& H) {
  if (H.kind == SubgroupKind::Multiplicative) return Polynomial::monomial(F.one(), H.size());
  return annihilator(F, H.elements);
}

GoodPolynomial normalize_gamma(const GaloisField& F, const Polynomial& g,
                               const PartitionSpec& partition) {
  if (partition.blocks.empty()) throw Error(Errc::InvalidParameters, "empty partition");
  GoodPolynomial out;
  out.raw = g;
  out.gamma = poly_eval(F, g, partition.blocks.back().front());
  out.normalized = poly_sub(F, g, Polynomial::constant(out.gamma));
  for (const auto& block : partition.blocks) {
    const Element value = poly_eval(F, out.normalized, block.front());
    for (Element x : block) {
      if (poly_eval(F, out.normalized, x) != value)
        throw Error(Errc::NotConstantOnBlocks,
                    "good polynomial is not constant on the block containing " +
                        std::to_string(block.front().value()));
    }
    out.block_values.push_back(value);
  }
  return out;
}

}  // namespace lrc
