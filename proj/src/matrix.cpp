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

#include "starpc/matrix.hpp"

#include <algorithm>

#include "starpc/error.hpp"

namespace starpc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols,
               std::vector<Symbol> entries)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(std::move(entries)) {
  Require(data_.size() == rows_ * cols_, Errc::kInvalidArgument,
          "matrix entry count does not match its shape");
  for (Symbol s : data_) {
    Require(field_.contains(s), Errc::kInvalidArgument,
            "matrix entry out of range for " + field_.name());
  }
}

Matrix::Matrix(Field field,
               std::initializer_list<std::initializer_list<int>> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(0) {
  if (rows_ > 0) cols_ = rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    Require(r.size() == cols_, Errc::kInvalidArgument, "ragged matrix literal");
    for (int v : r) data_.push_back(field_.from_integer(v));
  }
}

Matrix Matrix::Identity(Field field, std::size_t n) {
  Matrix out(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::RowVector(Field field, std::vector<Symbol> entries) {
  const std::size_t n = entries.size();
  return Matrix(std::move(field), 1, n, std::move(entries));
}

std::vector<Symbol> Matrix::column(std::size_t c) const {
  std::vector<Symbol> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    Require(indices[i] < rows_, Errc::kInvalidArgument, "row index out of range");
    std::copy_n(row(indices[i]).begin(), cols_, out.row(i).begin());
  }
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> indices) const {
  Matrix out(field_, rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    Require(indices[j] < cols_, Errc::kInvalidArgument,
            "column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, indices[j]);
  }
  return out;
}

Matrix Matrix::stack(const Matrix& below) const {
  Require(field_ == below.field_, Errc::kOwnerMismatch,
          "cannot stack matrices over different fields");
  Require(cols_ == below.cols_ || rows_ == 0 || below.rows_ == 0,
          Errc::kInvalidArgument, "column counts differ");
  const std::size_t cols = rows_ == 0 ? below.cols_ : cols_;
  std::vector<Symbol> data = data_;
  data.insert(data.end(), below.data_.begin(), below.data_.end());
  return Matrix(field_, rows_ + below.rows_, cols, std::move(data));
}

Matrix Matrix::embed(const Field& target) const {
  Require(field_.characteristic() == target.characteristic(),
          Errc::kCharacteristicMismatch,
          "cannot embed " + field_.name() + " into " + target.name());
  for (Symbol s : data_) {
    Require(field_.in_prime_subfield(s), Errc::kInvalidArgument,
            "only prime-subfield entries can be embedded");
  }
  return Matrix(target, rows_, cols_, data_);
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Symbol s) { return s == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Require(a.field() == b.field(), Errc::kOwnerMismatch,
          "matrix product over different fields");
  Require(a.cols() == b.rows(), Errc::kInvalidArgument,
          "matrix product shape mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Require(a.field() == b.field(), Errc::kOwnerMismatch,
          "matrix sum over different fields");
  Require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::kInvalidArgument,
          "matrix sum shape mismatch");
  std::vector<Symbol> data(a.entries().size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = a.field().add(a.entries()[i], b.entries()[i]);
  }
  return Matrix(a.field(), a.rows(), a.cols(), std::move(data));
}

std::vector<Symbol> RowTimes(std::span<const Symbol> v, const Matrix& a) {
  Require(v.size() == a.rows(), Errc::kInvalidArgument,
          "row vector length does not match matrix rows");
  const Field& f = a.field();
  std::vector<Symbol> out(a.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[j] = f.add(out[j], f.mul(v[i], a(i, j)));
    }
  }
  return out;
}

}  // namespace starpc
