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

#include "lrc/matrix.hpp"

#include <utility>

#include "lrc/error.hpp"

namespace lrc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaloisField::one();
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

std::vector<std::size_t> row_reduce(const GaloisField& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));

    const Element scale = F.inv(m(lead_row, col));
    for (auto& x : m.row(lead_row)) x = F.mul(x, scale);

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Element factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = F.sub(m(r, c), F.mul(factor, m(lead_row, c)));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t matrix_rank(const GaloisField& F, Matrix m) { return row_reduce(F, m).size(); }

std::vector<std::vector<Element>> nullspace(const GaloisField& F, const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = row_reduce(F, reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> y(m.cols());
    y[free] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = F.neg(reduced(i, free));
    basis.push_back(std::move(y));
  }
  return basis;
}

std::vector<Element> row_times(const GaloisField& F, std::span<const Element> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::LengthMismatch, "row vector length mismatch");
  std::vector<Element> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = F.add(out[c], F.mul(v[r], m(r, c)));
  }
  return out;
}

LinearSolution solve(const GaloisField& F, const Matrix& a, std::span<const Element> b) {
  if (b.size() != a.rows()) throw Error(Errc::LengthMismatch, "right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(F, aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return {LinearSolution::Status::Inconsistent, {}};
  if (pivots.size() < a.cols()) return {LinearSolution::Status::Underdetermined, {}};
  std::vector<Element> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return {LinearSolution::Status::Unique, std::move(x)};
}

}  // namespace lrc
