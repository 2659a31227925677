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

#include "lrc/repair.hpp"

#include <algorithm>
#include <string>

#include "lrc/error.hpp"

namespace lrc {

ErasurePattern::ErasurePattern(std::vector<std::size_t> erased, std::size_t n)
    : erased_(std::move(erased)) {
  std::sort(erased_.begin(), erased_.end());
  if (std::adjacent_find(erased_.begin(), erased_.end()) != erased_.end())
    throw Error(Errc::InvalidParameters, "erasure pattern has a repeated index");
  if (!erased_.empty() && erased_.back() >= n)
    throw Error(Errc::IndexOutOfRange, "erased index " + std::to_string(erased_.back()) +
                                           " out of range for n = " + std::to_string(n));
}

RepairGroup locate_group(const CodeSpec& spec, std::size_t coordinate) {
  if (coordinate >= spec.params.n)
    throw Error(Errc::IndexOutOfRange, "coordinate " + std::to_string(coordinate) +
                                           " out of range for n = " +
                                           std::to_string(spec.params.n));
  const Element point = spec.eval_points[coordinate];
  const auto& blocks = spec.partition.blocks;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!std::binary_search(blocks[b].begin(), blocks[b].end(), point)) continue;
    RepairGroup group;
    group.block = b;
    for (Element x : blocks[b]) {
      if (x == point) continue;
      if (auto c = coordinate_of(spec, x))
        group.helpers.push_back(*c);
      else
        group.implicit_zeros.push_back(x);
    }
    return group;
  }
  throw Error(Errc::InternalInconsistency, "evaluation point outside every block");
}

Element repair_local(const CodeSpec& spec, std::size_t coordinate,
                     std::span<const std::pair<Element, Element>> helper_values) {
  if (coordinate >= spec.params.n)
    throw Error(Errc::IndexOutOfRange, "coordinate " + std::to_string(coordinate) + " out of range");
  if (helper_values.size() != spec.params.r)
    throw Error(Errc::LengthMismatch, "local repair uses exactly r = " +
                                          std::to_string(spec.params.r) + " values, got " +
                                          std::to_string(helper_values.size()));
  const Polynomial restricted = lagrange_interpolate(spec.field, helper_values);
  return poly_eval(spec.field, restricted, spec.eval_points[coordinate]);
}

RepairOutcome repair_from_word(const CodeSpec& spec, std::span<const Element> word,
                               std::size_t coordinate) {
  if (word.size() != spec.params.n)
    throw Error(Errc::LengthMismatch, "word has " + std::to_string(word.size()) +
                                          " symbols, expected n = " +
                                          std::to_string(spec.params.n));
  const RepairGroup group = locate_group(spec, coordinate);
  RepairOutcome out;
  for (std::size_t c : group.helpers) out.used.emplace_back(spec.eval_points[c], word[c]);
  for (Element z : group.implicit_zeros) out.used.emplace_back(z, Element{});
  out.value = repair_local(spec, coordinate, out.used);
  return out;
}

Message decode_erasures(const CodeSpec& spec, std::span<const std::optional<Element>> received) {
  if (received.size() != spec.params.n)
    throw Error(Errc::LengthMismatch, "received word has " + std::to_string(received.size()) +
                                          " entries, expected n = " +
                                          std::to_string(spec.params.n));
  std::vector<std::size_t> known;
  std::vector<Element> values;
  for (std::size_t i = 0; i < received.size(); ++i) {
    if (!received[i]) continue;
    if (!spec.field.contains(*received[i]))
      throw Error(Errc::InvalidElement, "received symbol out of range");
    known.push_back(i);
    values.push_back(*received[i]);
  }
  // msg * G_K = c_K  <=>  G_K^T * msg = c_K
  const Matrix system = spec.generator.select_columns(known).transpose();
  LinearSolution sol = solve(spec.field, system, values);
  switch (sol.status) {
    case LinearSolution::Status::Unique:
      return std::move(sol.x);
    case LinearSolution::Status::Underdetermined:
      throw Error(Errc::Unrecoverable, std::to_string(spec.params.n - known.size()) +
                                           " erasures leave the message undetermined");
    case LinearSolution::Status::Inconsistent:
      break;
  }
  throw Error(Errc::InconsistentWord, "received symbols do not agree with any codeword");
}

}  // namespace lrc
