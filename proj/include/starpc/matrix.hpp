// Copyright 2026 The starpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STARPC_MATRIX_HPP_
#define STARPC_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "starpc/field.hpp"

namespace starpc {

// Row-major dense matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols,
         std::vector<Symbol> entries);
  // Convenience for tests and literals: entries are integers reduced into
  // the prime subfield.
  Matrix(Field field, std::initializer_list<std::initializer_list<int>> rows);

  static Matrix Identity(Field field, std::size_t n);
  static Matrix RowVector(Field field, std::vector<Symbol> entries);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Symbol operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Symbol& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  std::span<const Symbol> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::vector<Symbol> column(std::size_t c) const;
  const std::vector<Symbol>& entries() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_cols(std::span<const std::size_t> indices) const;
  // Rows of `this` followed by rows of `below`.
  Matrix stack(const Matrix& below) const;

  // Same entries reinterpreted in `target`; every entry must lie in the
  // prime subfield and the characteristics must agree.
  Matrix embed(const Field& target) const;

  bool is_zero() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

// v * A for a row vector v of length a.rows().
std::vector<Symbol> RowTimes(std::span<const Symbol> v, const Matrix& a);

}  // namespace starpc

#endif  // STARPC_MATRIX_HPP_
