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

#include "lrc/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <thread>

#include "lrc/bounds.hpp"
#include "lrc/error.hpp"
#include "lrc/repair.hpp"

namespace lrc {
namespace {

std::uint64_t binomial(std::size_t n, std::size_t e) {
  if (e > n) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= e; ++i) c = c * (n - e + i) / i;
  return c;
}

// Minimum weight over messages whose last coordinate is `top`, the other
// k-1 coordinates running through all of GF(q)^(k-1). Each coordinate is
// split into e digits over GF(p) (the coefficients of 1, x, ..., x^(e-1)),
// and a p-ary Gray code over those digits changes one digit by +1 per step,
// i.e. adds x^b * G_j to the running word.
std::size_t min_weight_with_top(const GaloisField& F, const Matrix& G, std::uint32_t top) {
  const std::size_t k = G.rows();
  const std::size_t n = G.cols();
  const std::uint32_t p = F.characteristic();
  const unsigned e = F.extension_degree();
  const bool binary = p == 2;

  const std::size_t digits = (k - 1) * e;
  std::vector<std::uint32_t> deltas(digits * n);
  for (std::size_t d = 0; d < digits; ++d) {
    const Element basis{e == 1 ? 1U : 1U << (d % e)};
    for (std::size_t c = 0; c < n; ++c) deltas[d * n + c] = F.mul(basis, G(d / e, c)).value();
  }

  std::vector<std::uint32_t> word(n);
  for (std::size_t c = 0; c < n; ++c) word[c] = F.mul(Element{top}, G(k - 1, c)).value();

  auto weight = [&] {
    std::size_t w = 0;
    for (auto x : word) w += x != 0;
    return w;
  };

  std::size_t best = std::numeric_limits<std::size_t>::max();
  if (top != 0) best = weight();

  const std::uint64_t steps = message_space_size(F.order(), k - 1);
  for (std::uint64_t step = 1; step < steps; ++step) {
    // The digit that moves is the p-adic valuation of step.
    std::size_t d = 0;
    if (binary) {
      d = static_cast<std::size_t>(std::countr_zero(step));
    } else {
      for (std::uint64_t u = step; u % p == 0; u /= p) ++d;
    }
    const std::uint32_t* delta = &deltas[d * n];
    if (binary) {
      for (std::size_t c = 0; c < n; ++c) word[c] ^= delta[c];
    } else {
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t s = word[c] + delta[c];
        word[c] = s >= p ? s - p : s;
      }
    }
    best = std::min(best, weight());
  }
  return best;
}

}  // namespace

std::uint64_t message_space_size(std::uint32_t q, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total;
}

DistanceResult brute_force_distance(const GaloisField& F, const Matrix& G, std::uint64_t budget,
                                    unsigned workers) {
  if (G.rows() == 0) throw Error(Errc::InvalidParameters, "empty generator matrix");
  const std::uint64_t words = message_space_size(F.order(), G.rows());
  if (words > budget)
    throw Error(Errc::BudgetExceeded, "enumeration needs " + std::to_string(words) +
                                          " messages but the budget is " +
                                          std::to_string(budget));

  workers = std::clamp(workers, 1U, F.order());
  std::vector<std::size_t> best(workers, std::numeric_limits<std::size_t>::max());
  auto run = [&](unsigned w) {
    for (std::uint32_t top = w; top < F.order(); top += workers)
      best[w] = std::min(best[w], min_weight_with_top(F, G, top));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  return {*std::min_element(best.begin(), best.end()), words - 1};
}

DistanceResult brute_force_distance(const CodeSpec& spec, std::uint64_t budget, unsigned workers) {
  return brute_force_distance(spec.field, spec.generator, budget, workers);
}

bool verify_locality(const GaloisField& F, const Matrix& G,
                     std::span<const std::vector<std::size_t>> groups) {
  for (const auto& group : groups) {
    const auto duals = nullspace(F, G.select_columns(group));
    for (std::size_t j = 0; j < group.size(); ++j) {
      const bool covered = std::any_of(duals.begin(), duals.end(),
                                       [j](const auto& y) { return !y[j].is_zero(); });
      if (!covered) return false;
    }
  }
  return true;
}

bool verify_locality(const CodeSpec& spec) {
  const auto groups = repair_groups(spec);
  for (const auto& g : groups)
    if (g.size() > spec.params.r + 1) return false;
  return verify_locality(spec.field, spec.generator, groups);
}

bool in_shortened_parent(const CodeSpec& spec, std::span<const Element> parent_word) {
  const auto points = parent_points(spec);
  if (parent_word.size() != points.size()) return false;
  std::vector<std::pair<Element, Element>> samples;
  samples.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool removed = std::binary_search(spec.partition.removed.begin(),
                                            spec.partition.removed.end(), points[i]);
    if (removed && !parent_word[i].is_zero()) return false;
    samples.emplace_back(points[i], parent_word[i]);
  }
  return lagrange_interpolate(spec.field, samples).degree() <= degree_cap(spec.params);
}

Message random_message(const CodeSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> symbol(0, spec.field.order() - 1);
  Message msg(spec.params.k);
  for (auto& a : msg) a = Element{symbol(rng)};
  return msg;
}

bool verify_shortening(const CodeSpec& spec, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (!in_shortened_parent(spec, extend_to_parent(Message(spec.params.k), spec))) return false;
  for (std::size_t trial = 0; trial < trials; ++trial)
    if (!in_shortened_parent(spec, extend_to_parent(random_message(spec, rng), spec))) return false;
  return true;
}

bool exhaustive_erasure_test(const CodeSpec& spec, std::size_t e, std::uint64_t seed,
                             std::uint64_t budget) {
  const std::size_t n = spec.params.n;
  if (e > n) return false;
  const std::uint64_t patterns = binomial(n, e);
  if (patterns > budget)
    throw Error(Errc::BudgetExceeded, "C(" + std::to_string(n) + ", " + std::to_string(e) +
                                          ") = " + std::to_string(patterns) +
                                          " patterns exceed the budget");

  std::mt19937_64 rng(seed);
  const Message msg = random_message(spec, rng);
  const Codeword word = encode(msg, spec);

  // Walk all e-subsets through a selection mask in lexicographic order.
  std::vector<bool> mask(n, false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(e), mask.end(), true);
  do {
    ReceivedWord received(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!mask[i]) received[i] = word[i];
    try {
      if (decode_erasures(spec, received) != msg) return false;
    } catch (const Error& err) {
      if (err.code() == Errc::Unrecoverable || err.code() == Errc::InconsistentWord) return false;
      throw;
    }
  } while (std::next_permutation(mask.begin(), mask.end()));
  return true;
}

VerificationReport verify_code(const CodeSpec& spec, std::uint64_t budget, std::uint64_t seed,
                               unsigned workers) {
  const auto& p = spec.params;
  const std::uint64_t words = message_space_size(p.q, p.k);
  if (words > budget)
    throw Error(Errc::BudgetExceeded, "distance enumeration needs " + std::to_string(words) +
                                          " messages but the budget is " +
                                          std::to_string(budget));
  const long expected = predicted_distance(p);
  const std::size_t erasures = expected > 0 ? static_cast<std::size_t>(expected - 1) : 0;
  if (binomial(p.n, erasures) > budget)
    throw Error(Errc::BudgetExceeded, "erasure test needs C(" + std::to_string(p.n) + ", " +
                                          std::to_string(erasures) + ") patterns");

  VerificationReport report;
  report.rank_ok = matrix_rank(spec.field, spec.generator) == p.k;

  report.generator_consistent = true;
  for (std::size_t row = 0; row < p.k && report.generator_consistent; ++row) {
    Message unit(p.k);
    unit[row] = GaloisField::one();
    const Codeword c = encode(unit, spec);
    report.generator_consistent = std::equal(c.begin(), c.end(), spec.generator.row(row).begin());
  }

  const DistanceResult dist = brute_force_distance(spec, budget, workers);
  report.distance_found = dist.distance;
  report.enumerated_words = dist.enumerated;
  report.distance_expected = expected;
  report.locality_ok = verify_locality(spec);
  report.shortening_ok = verify_shortening(spec, 1000, seed);
  report.erasure_ok = exhaustive_erasure_test(spec, erasures, seed, budget);
  return report;
}

}  // namespace lrc
