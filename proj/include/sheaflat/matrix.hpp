// Copyright 2026 The Authors.
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
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"

namespace sheaflat {

/// Dense row-major matrix over an exact field. Matrices act on column
/// vectors: an r x c matrix is a map from F^c to F^r. 0 x n and n x 0
/// shapes are legal.
template <FieldType F>
class Matrix {
 public:
  using Scalar = typename F::Scalar;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_ints(const F& field,
                          std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols,
                          const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Scalar> column(std::size_t c) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!field_.is_zero(v)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Sub-matrix built from the given row and column index lists.
  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  Matrix scaled(const Scalar& k) const {
    Matrix s = *this;
    for (auto& v : s.data_) v = field_.mul(v, k);
    return s;
  }

  std::vector<Scalar> apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape");
    std::vector<Scalar> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const Scalar& a = (*this)(r, c);
        if (!field_.is_zero(a) && !field_.is_zero(v[c])) field_.add_mul(out[r], a, v[c]);
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "product of " + a.shape() + " and " + b.shape());
    }
    const F& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    std::vector<std::vector<std::size_t>> b_nz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!f.is_zero(b(k, j))) b_nz[k].push_back(j);
      }
    }
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j : b_nz[k]) f.add_mul(out(i, j), aik, b(k, j));
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m.field_.to_string(m(r, c));
      os << "]";
    }
    return os << "]";
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw Error(ErrorCode::kDimensionMismatch, shape() + " vs " + b.shape());
    }
  }

  F field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

template <FieldType F>
Matrix<F> vstack(const Matrix<F>& top, const Matrix<F>& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::kDimensionMismatch, "vstack column count");
  Matrix<F> out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

template <FieldType F>
Matrix<F> hstack(const Matrix<F>& left, const Matrix<F>& right) {
  if (left.rows() != right.rows()) throw Error(ErrorCode::kDimensionMismatch, "hstack row count");
  Matrix<F> out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

}  // namespace sheaflat
