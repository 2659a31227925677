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
#include <random>
#include <span>
#include <vector>

#include "lrc/construction.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

/// q^k, saturating at UINT64_MAX.
std::uint64_t message_space_size(std::uint32_t q, std::size_t k);

struct DistanceResult {
  std::size_t distance = 0;
  std::uint64_t enumerated = 0;  // nonzero messages visited, q^k - 1
};

/// Exact minimum weight of the row space of G over all q^k - 1 nonzero
/// messages. Consecutive messages follow a Gray code over the digits of the
/// message in GF(p), so each step adds one scaled generator row to the
/// running codeword. The message space is split by
/// its last coordinate across `workers` threads; the result does not depend
/// on the split. Throws Errc::BudgetExceeded when q^k > budget.
DistanceResult brute_force_distance(const GaloisField& F, const Matrix& G, std::uint64_t budget,
                                    unsigned workers = 1);
DistanceResult brute_force_distance(const CodeSpec& spec, std::uint64_t budget,
                                    unsigned workers = 1);

/// For every group of columns, every member coordinate must appear in the
/// support of some vector y with G_group * y = 0, i.e. it is a linear
/// function of the other members on every codeword.
bool verify_locality(const GaloisField& F, const Matrix& G,
                     std::span<const std::vector<std::size_t>> groups);
bool verify_locality(const CodeSpec& spec);

/// A word on parent_points(spec) belongs to the shortened parent when it
/// vanishes on B and interpolates to degree <= degree_cap(params).
bool in_shortened_parent(const CodeSpec& spec, std::span<const Element> parent_word);

bool verify_shortening(const CodeSpec& spec, std::size_t trials, std::uint64_t seed);

/// Erases every e-subset of coordinates of one random codeword and checks
/// that decode_erasures returns the original message each time.
/// Throws Errc::BudgetExceeded when C(n, e) > budget.
bool exhaustive_erasure_test(const CodeSpec& spec, std::size_t e, std::uint64_t seed,
                             std::uint64_t budget = 1'000'000);

Message random_message(const CodeSpec& spec, std::mt19937_64& rng);

struct VerificationReport {
  bool rank_ok = false;
  bool generator_consistent = false;  // rows equal the encodings of unit messages
  std::size_t distance_found = 0;
  long distance_expected = 0;
  bool locality_ok = false;
  bool shortening_ok = false;
  bool erasure_ok = false;
  std::uint64_t enumerated_words = 0;

  bool all_passed() const {
    return rank_ok && generator_consistent && locality_ok && shortening_ok && erasure_ok &&
           static_cast<long>(distance_found) == distance_expected;
  }
};

/// Runs every oracle. The budget is checked before any work is done, so the
/// report is either complete or the call throws Errc::BudgetExceeded.
VerificationReport verify_code(const CodeSpec& spec, std::uint64_t budget, std::uint64_t seed,
                               unsigned workers = 1);

}  // namespace lrc
