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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lrc/field.hpp"
#include "lrc/goodpoly.hpp"
#include "lrc/matrix.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {

using Message = std::vector<Element>;
using Codeword = std::vector<Element>;

/// Validated (q, n, k, r) and the quantities derived from them.
///
/// When (r+1) | n the last block is complete: s = r+1, t = 0, and the code is
/// the unshortened construction.
struct CodeParams {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t s = 0;        // size of the last repair group
  std::size_t t = 0;        // points removed from the last block, r + 1 - s
  std::size_t m = 0;        // number of blocks, ceil(n / (r+1))
  std::size_t n_bar = 0;    // m (r+1), length of the unshortened parent
  std::size_t k_prime = 0;  // k + t
  SubgroupKind subgroup = SubgroupKind::Multiplicative;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Bound on deg f_a for every message: k' + ceil(k'/r) - 2.
std::size_t degree_cap(const CodeParams& params);

/// Throws SEqualsOne, RateBoundViolated, InvalidParameters, FieldTooSmall,
/// or the field/subgroup errors for q.
CodeParams validate_params(std::uint32_t q, std::size_t n, std::size_t k, std::size_t r);

/// Message coordinates: first the a_{ij} slots ordered by (i, j), then
/// b_0 .. b_{b_count-1}.
struct MessageLayout {
  std::vector<long> s_values;                             // S_{k',r}(i), i = 0..r-1
  std::vector<std::pair<std::size_t, std::size_t>> a_slots;  // (i, j), j >= 1
  std::size_t b_count = 0;

  std::size_t size() const { return a_slots.size() + b_count; }
  friend bool operator==(const MessageLayout&, const MessageLayout&) = default;
};

/// For k' >= r every S value is non-negative and b_count = s - 1. For
/// k' < r the a-part is empty and only the first k of the s - 1 shortened
/// low-degree terms are used.
MessageLayout message_layout(const CodeParams& params);

/// A fully built code. Immutable after build_code; safe to share.
struct CodeSpec {
  CodeParams params;
  GaloisField field;
  SubgroupSpec subgroup;
  PartitionSpec partition;
  GoodPolynomial good;
  Polynomial h_B;
  std::vector<Element> eval_points;  // sorted; coordinate i is f_a(eval_points[i])
  MessageLayout layout;
  std::vector<Polynomial> basis;     // f_a for the unit message at each slot
  Matrix generator;                  // k x n
};

CodeSpec build_code(const CodeParams& params);

/// Throws Errc::InvalidSpecFile naming the first structural invariant that
/// fails. The generator matrix is checked for shape and range only.
void check_invariants(const CodeSpec& spec);

/// Coordinate index of an evaluation point, if it is one.
std::optional<std::size_t> coordinate_of(const CodeSpec& spec, Element point);

/// Coordinate indices of each repair group, in block order. The last group
/// has s members.
std::vector<std::vector<std::size_t>> repair_groups(const CodeSpec& spec);

/// All n_bar points of the parent code, block by block.
std::vector<Element> parent_points(const CodeSpec& spec);

Polynomial assemble_polynomial(std::span<const Element> msg, const CodeSpec& spec);
Codeword encode(std::span<const Element> msg, const CodeSpec& spec);
/// f_a evaluated on parent_points(spec); zero on the removed points.
std::vector<Element> extend_to_parent(std::span<const Element> msg, const CodeSpec& spec);

}  // namespace lrc
