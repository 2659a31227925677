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
#include <span>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

/// Dense row-major matrix of field elements. Arithmetic lives in free
/// functions that take the field, since the field is a runtime value.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Columns in the given order.
  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const GaloisField& F, Matrix& m);

std::size_t matrix_rank(const GaloisField& F, Matrix m);

/// Basis of { y : m * y = 0 }.
std::vector<std::vector<Element>> nullspace(const GaloisField& F, const Matrix& m);

/// v * m for a row vector v.
std::vector<Element> row_times(const GaloisField& F, std::span<const Element> v, const Matrix& m);

struct LinearSolution {
  enum class Status { Unique, Underdetermined, Inconsistent };
  Status status;
  std::vector<Element> x;  // filled only when Unique
};

/// Solves a * x = b.
LinearSolution solve(const GaloisField& F, const Matrix& a, std::span<const Element> b);

}  // namespace lrc
