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

#include "lrc/bounds.hpp"

#include <string>

#include "lrc/error.hpp"

namespace lrc {
namespace {

long ceil_div(std::size_t a, std::size_t b) { return static_cast<long>((a + b - 1) / b); }

void ensure(bool condition, const char* what) {
  if (!condition) throw Error(Errc::InternalInconsistency, what);
}

}  // namespace

long singleton_like_bound(std::size_t n, std::size_t k, std::size_t r) {
  return static_cast<long>(n) - static_cast<long>(k) - ceil_div(k, r) + 2;
}

bool rate_bound_holds(std::size_t n, std::size_t k, std::size_t r) {
  return static_cast<long>(k) <= static_cast<long>(n) - ceil_div(n, r + 1);
}

std::optional<long> improved_bound(std::size_t n, std::size_t k, std::size_t r) {
  const std::size_t s = n % (r + 1);
  if (s == 0 || s == 1) return std::nullopt;
  if (k % r != 0 && k % r < s) return std::nullopt;
  return singleton_like_bound(n, k, r) - 1;
}

long predicted_distance(const CodeParams& params) {
  return static_cast<long>(params.n) - static_cast<long>(params.k) -
         ceil_div(params.k_prime, params.r) + 2;
}

std::string_view to_string(OptimalityReason reason) {
  return reason == OptimalityReason::SingletonTight ? "singleton-like bound tight (delta = 0)"
                                                    : "improved bound tight (delta = 1)";
}

BoundsReport optimality_report(const CodeParams& params) {
  const auto& p = params;
  BoundsReport report;
  report.d_singleton = singleton_like_bound(p.n, p.k, p.r);
  report.d_improved = improved_bound(p.n, p.k, p.r);
  report.d_predicted = predicted_distance(p);
  report.delta = static_cast<int>(ceil_div(p.k + p.t, p.r) - ceil_div(p.k, p.r));

  ensure(report.delta == 0 || report.delta == 1, "delta outside {0, 1}");
  ensure(report.d_predicted == report.d_singleton - report.delta,
         "predicted distance disagrees with the singleton-like bound and delta");
  if (p.t > 0) {
    const bool condition = p.k % p.r == 0 || p.k % p.r >= p.s;
    ensure((report.delta == 1) == condition, "delta dichotomy violated");
  }

  if (report.delta == 0) {
    report.reason = OptimalityReason::SingletonTight;
  } else {
    ensure(report.d_improved.has_value() && *report.d_improved == report.d_predicted,
           "improved bound does not meet the predicted distance");
    report.reason = OptimalityReason::ImprovedTight;
  }
  report.optimal = true;
  return report;
}

}  // namespace lrc
