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
#include <string_view>

#include "lrc/construction.hpp"

namespace lrc {

/// n - k - ceil(k/r) + 2, the locality-aware Singleton bound.
long singleton_like_bound(std::size_t n, std::size_t k, std::size_t r);

/// k <= n - ceil(n/(r+1)).
bool rate_bound_holds(std::size_t n, std::size_t k, std::size_t r);

/// n - k - ceil(k/r) + 1 for codes whose repair groups are m-1 disjoint
/// groups of size r+1 plus one of size s = n mod (r+1), s not in {0, 1},
/// provided r | k or k mod r >= s. Empty when those conditions fail.
std::optional<long> improved_bound(std::size_t n, std::size_t k, std::size_t r);

/// n - k - ceil(k'/r) + 2: the distance the construction guarantees.
long predicted_distance(const CodeParams& params);

enum class OptimalityReason {
  SingletonTight,  // delta = 0
  ImprovedTight,   // delta = 1
};

std::string_view to_string(OptimalityReason reason);

struct BoundsReport {
  long d_singleton = 0;
  std::optional<long> d_improved;
  int delta = 0;
  long d_predicted = 0;
  bool optimal = false;
  OptimalityReason reason = OptimalityReason::SingletonTight;
};

/// delta = ceil((k+t)/r) - ceil(k/r). Throws Errc::InternalInconsistency if
/// the delta dichotomy or the matching upper bound fails; that would be a
/// bug, never a property of valid parameters.
BoundsReport optimality_report(const CodeParams& params);

}  // namespace lrc
