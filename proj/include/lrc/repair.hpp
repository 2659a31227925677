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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lrc/construction.hpp"

namespace lrc {

/// Sorted, distinct, 0-based coordinate indices.
class ErasurePattern {
 public:
  ErasurePattern(std::vector<std::size_t> erased, std::size_t n);

  std::span<const std::size_t> erased() const { return erased_; }
  std::size_t size() const { return erased_.size(); }

 private:
  std::vector<std::size_t> erased_;
};

/// What is needed to repair one coordinate: the other members of its repair
/// group plus, for the shortened last group, the removed points where every
/// codeword polynomial is known to vanish.
struct RepairGroup {
  std::size_t block = 0;                 // 0-based index into the partition
  std::vector<std::size_t> helpers;      // coordinate indices
  std::vector<Element> implicit_zeros;   // points of B
};

/// Throws Errc::IndexOutOfRange.
RepairGroup locate_group(const CodeSpec& spec, std::size_t coordinate);

/// Interpolates the degree <= r-1 restriction of f_a through exactly r
/// (point, value) pairs and evaluates it at the erased coordinate's point.
/// Throws Errc::LengthMismatch unless exactly r pairs are supplied.
Element repair_local(const CodeSpec& spec, std::size_t coordinate,
                     std::span<const std::pair<Element, Element>> helper_values);

struct RepairOutcome {
  Element value;
  std::vector<std::pair<Element, Element>> used;  // the r (point, value) pairs
};

/// Gathers the helper values from `word` (the entry at `coordinate` is
/// ignored) and repairs the coordinate.
RepairOutcome repair_from_word(const CodeSpec& spec, std::span<const Element> word,
                               std::size_t coordinate);

using ReceivedWord = std::vector<std::optional<Element>>;

/// Recovers the message by solving the generator system restricted to the
/// known coordinates. Throws Errc::Unrecoverable when that system is rank
/// deficient and Errc::InconsistentWord when no codeword matches.
Message decode_erasures(const CodeSpec& spec, std::span<const std::optional<Element>> received);

}  // namespace lrc
