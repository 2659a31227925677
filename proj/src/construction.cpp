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

#include "lrc/construction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lrc/error.hpp"

namespace lrc {
namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::InvalidSpecFile, what);
}

void check_message_length(std::span<const Element> msg, const CodeSpec& spec) {
  if (msg.size() != spec.params.k)
    throw Error(Errc::LengthMismatch, "message has " + std::to_string(msg.size()) +
                                          " symbols, expected k = " +
                                          std::to_string(spec.params.k));
  for (Element a : msg)
    if (!spec.field.contains(a))
      throw Error(Errc::InvalidElement, "message symbol " + std::to_string(a.value()) +
                                            " is not in GF(" +
                                            std::to_string(spec.field.order()) + ")");
}

}  // namespace

std::size_t degree_cap(const CodeParams& params) {
  return params.k_prime + ceil_div(params.k_prime, params.r) - 2;
}

CodeParams validate_params(std::uint32_t q, std::size_t n, std::size_t k, std::size_t r) {
  if (q == 0 || n == 0 || k == 0 || r == 0)
    throw Error(Errc::InvalidParameters, "q, n, k, r must be positive");
  if (r >= n)
    throw Error(Errc::InvalidParameters, "locality r = " + std::to_string(r) +
                                             " must be smaller than n = " + std::to_string(n));

  CodeParams p;
  p.q = q;
  p.n = n;
  p.k = k;
  p.r = r;
  const std::size_t residue = n % (r + 1);
  if (residue == 1)
    throw Error(Errc::SEqualsOne, "s = n mod (r+1) = 1 not supported");
  if (residue == 0) {
    p.s = r + 1;
    p.t = 0;
    p.m = n / (r + 1);
  } else {
    p.s = residue;
    p.t = r + 1 - residue;
    p.m = ceil_div(n, r + 1);
  }
  p.n_bar = p.m * (r + 1);
  p.k_prime = k + p.t;

  const std::size_t k_max = n - ceil_div(n, r + 1);
  if (k > k_max)
    throw Error(Errc::RateBoundViolated, "rate bound violated: k = " + std::to_string(k) +
                                             " > n - ceil(n/(r+1)) = " + std::to_string(k_max));

  const GaloisField F(q);
  const SubgroupSpec H = find_subgroup(F, r + 1);
  p.subgroup = H.kind;
  const std::size_t capacity = coset_capacity(F, H.kind);
  if (p.n_bar > capacity)
    throw Error(Errc::FieldTooSmall, "n_bar = " + std::to_string(p.n_bar) + " exceeds the " +
                                         std::to_string(capacity) + " points covered by " +
                                         std::string(to_string(H.kind)) + " cosets in GF(" +
                                         std::to_string(q) + ")");
  return p;
}

MessageLayout message_layout(const CodeParams& params) {
  MessageLayout layout;
  const long kp = static_cast<long>(params.k_prime);
  const long r = static_cast<long>(params.r);
  for (long i = 0; i < r; ++i) layout.s_values.push_back(i < kp % r ? kp / r : kp / r - 1);

  for (std::size_t i = 0; i < params.r; ++i)
    for (long j = 1; j <= layout.s_values[i]; ++j)
      layout.a_slots.emplace_back(i, static_cast<std::size_t>(j));
  layout.b_count = std::min(params.s - 1, params.k);

  if (layout.size() != params.k)
    throw Error(Errc::InternalInconsistency, "message layout has " +
                                                 std::to_string(layout.size()) +
                                                 " slots for k = " + std::to_string(params.k));
  return layout;
}

CodeSpec build_code(const CodeParams& params) {
  const GaloisField F(params.q);
  SubgroupSpec H = find_subgroup(F, params.r + 1);

  PartitionSpec partition;
  partition.blocks = coset_partition(F, H, params.m);
  const auto& last = partition.blocks.back();
  partition.removed.assign(last.end() - static_cast<std::ptrdiff_t>(params.t), last.end());

  GoodPolynomial good = normalize_gamma(F, good_polynomial(F, H), partition);
  Polynomial h_B = annihilator(F, partition.removed);
  std::vector<Element> eval_points = partition.evaluation_set();
  MessageLayout layout = message_layout(params);

  std::vector<Polynomial> basis;
  basis.reserve(params.k);
  for (const auto& [i, j] : layout.a_slots)
    basis.push_back(poly_mul(F, poly_pow(F, good.normalized, j), Polynomial::monomial(F.one(), i)));
  for (std::size_t b = 0; b < layout.b_count; ++b)
    basis.push_back(poly_mul(F, h_B, Polynomial::monomial(F.one(), b)));

  CodeSpec spec{params,
                F,
                std::move(H),
                std::move(partition),
                std::move(good),
                std::move(h_B),
                std::move(eval_points),
                std::move(layout),
                std::move(basis),
                Matrix(params.k, params.n)};

  for (std::size_t row = 0; row < params.k; ++row)
    for (std::size_t c = 0; c < params.n; ++c)
      spec.generator(row, c) = poly_eval(F, spec.basis[row], spec.eval_points[c]);

  check_invariants(spec);
  if (matrix_rank(F, spec.generator) != params.k)
    throw Error(Errc::InternalInconsistency, "generator matrix is rank deficient");
  return spec;
}

void check_invariants(const CodeSpec& spec) {
  const auto& p = spec.params;
  const auto& F = spec.field;
  require(F.order() == p.q, "field order does not match q");
  require(spec.subgroup.size() == p.r + 1, "subgroup size is not r+1");
  require(spec.partition.blocks.size() == p.m, "partition does not have m blocks");

  std::set<Element> seen;
  for (const auto& block : spec.partition.blocks) {
    require(block.size() == p.r + 1, "partition block of wrong size");
    require(std::is_sorted(block.begin(), block.end()), "partition block not sorted");
    for (Element x : block) {
      require(F.contains(x), "partition element outside the field");
      require(seen.insert(x).second, "partition blocks overlap");
    }
  }

  const auto& removed = spec.partition.removed;
  const auto& last = spec.partition.blocks.back();
  require(removed.size() == p.t, "|B| != t");
  require(std::is_sorted(removed.begin(), removed.end()), "B not sorted");
  for (Element b : removed)
    require(std::binary_search(last.begin(), last.end(), b), "B is not inside the last block");

  require(spec.h_B.degree() == p.t, "deg h_B != t");
  for (Element b : removed) require(poly_eval(F, spec.h_B, b).is_zero(), "h_B does not vanish on B");

  const auto& good = spec.good;
  require(good.raw.degree() == p.r + 1, "deg g != r+1");
  require(good.normalized == poly_sub(F, good.raw, Polynomial::constant(good.gamma)),
          "g_tilde != g - gamma");
  require(good.block_values.size() == p.m, "one block value per block required");
  for (std::size_t b = 0; b < p.m; ++b)
    for (Element x : spec.partition.blocks[b])
      require(poly_eval(F, good.normalized, x) == good.block_values[b],
              "g_tilde is not constant on a block");
  require(good.block_values.back().is_zero(), "g_tilde does not vanish on the last block");

  require(spec.eval_points == spec.partition.evaluation_set(), "evaluation points do not match A");
  require(spec.eval_points.size() == p.n, "|A| != n");
  require(spec.layout == message_layout(p), "message layout mismatch");
  require(spec.basis.size() == p.k, "basis size != k");

  require(spec.generator.rows() == p.k && spec.generator.cols() == p.n,
          "generator matrix is not k x n");
  for (std::size_t row = 0; row < p.k; ++row)
    for (Element x : spec.generator.row(row))
      require(F.contains(x), "generator entry outside the field");
}

std::optional<std::size_t> coordinate_of(const CodeSpec& spec, Element point) {
  const auto it = std::lower_bound(spec.eval_points.begin(), spec.eval_points.end(), point);
  if (it == spec.eval_points.end() || *it != point) return std::nullopt;
  return static_cast<std::size_t>(it - spec.eval_points.begin());
}

std::vector<std::vector<std::size_t>> repair_groups(const CodeSpec& spec) {
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& block : spec.partition.blocks) {
    std::vector<std::size_t> members;
    for (Element x : block)
      if (auto c = coordinate_of(spec, x)) members.push_back(*c);
    groups.push_back(std::move(members));
  }
  return groups;
}

std::vector<Element> parent_points(const CodeSpec& spec) {
  std::vector<Element> points;
  points.reserve(spec.params.n_bar);
  for (const auto& block : spec.partition.blocks) points.insert(points.end(), block.begin(), block.end());
  return points;
}

Polynomial assemble_polynomial(std::span<const Element> msg, const CodeSpec& spec) {
  check_message_length(msg, spec);
  Polynomial f;
  for (std::size_t slot = 0; slot < msg.size(); ++slot)
    if (!msg[slot].is_zero()) f = poly_add(spec.field, f, poly_scale(spec.field, spec.basis[slot], msg[slot]));
  return f;
}

Codeword encode(std::span<const Element> msg, const CodeSpec& spec) {
  const Polynomial f = assemble_polynomial(msg, spec);
  Codeword c;
  c.reserve(spec.params.n);
  for (Element alpha : spec.eval_points) c.push_back(poly_eval(spec.field, f, alpha));
  return c;
}

std::vector<Element> extend_to_parent(std::span<const Element> msg, const CodeSpec& spec) {
  const Polynomial f = assemble_polynomial(msg, spec);
  std::vector<Element> word;
  word.reserve(spec.params.n_bar);
  for (Element alpha : parent_points(spec)) word.push_back(poly_eval(spec.field, f, alpha));
  return word;
}

}  // namespace lrc
