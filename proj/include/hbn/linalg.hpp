// Copyright 2026 The hbn Authors.
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
#include <stdexcept>
#include <utility>
#include <vector>

#include "hbn/field.hpp"

namespace hbn {

/// Dense row-major matrix over a finite field.
template <class Field>
class Matrix {
 public:
  using Elem = typename Field::Elem;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(std::move(field), rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Appends the columns of o (same row count).
  Matrix hconcat(const Matrix& o) const {
    if (o.rows_ != rows_) throw std::invalid_argument("row count mismatch in hconcat");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

using FpMatrix = Matrix<PrimeField>;

/// Rank by Gaussian elimination. Over a field every pivot is invertible, so
/// elimination is exact.
template <class Field>
std::size_t matrix_rank(Matrix<Field> m) {
  const auto& F = m.field();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && F.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const auto inv = F.inv(m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (F.is_zero(m(i, col))) continue;
      const auto factor = F.mul(m(i, col), inv);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = F.sub(m(i, j), F.mul(factor, m(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

/// Prime-field rank with delayed reduction: row updates accumulate in 64 bits
/// and are reduced only when the next update could overflow.
inline std::size_t matrix_rank(const Matrix<PrimeField>& m) {
  const auto& F = m.field();
  const std::uint64_t p = F.characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j);
  }
  const std::uint64_t headroom = (~std::uint64_t{0} - p) / ((p - 1) * (p - 1));
  std::uint64_t pending = 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      auto& v = a[i * cols + col];
      v = F.reduce(v);
      if (v != 0 && pivot == rows) pivot = i;
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    std::uint64_t* prow = &a[rank * cols];
    for (std::size_t j = col; j < cols; ++j) prow[j] = F.reduce(prow[j]);
    if (pending + 1 > headroom) {
      for (std::size_t i = rank + 1; i < rows; ++i) {
        for (std::size_t j = col; j < cols; ++j) a[i * cols + j] = F.reduce(a[i * cols + j]);
      }
      pending = 0;
    }
    const auto inv = F.inv(static_cast<PrimeField::Elem>(prow[col]));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* row = &a[i * cols];
      if (row[col] == 0) continue;
      const std::uint64_t factor = p - F.mul(static_cast<PrimeField::Elem>(row[col]), inv);
      for (std::size_t j = col; j < cols; ++j) row[j] += factor * prow[j];
    }
    ++pending;
    ++rank;
  }
  return rank;
}

/// Determinant by elimination.
template <class Field>
typename Field::Elem matrix_determinant(Matrix<Field> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto& F = m.field();
  auto det = F.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && F.is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return F.zero();
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(col, col));
    const auto inv = F.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (F.is_zero(m(i, col))) continue;
      const auto factor = F.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(col, j)));
    }
  }
  return det;
}

/// A basis of the right kernel {v : m v = 0}.
template <class Field>
std::vector<std::vector<typename Field::Elem>> kernel_basis(Matrix<Field> m) {
  const auto& F = m.field();
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && F.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    const auto inv = F.inv(m(rank, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) = F.mul(m(rank, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || F.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(rank, j)));
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename Field::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::Elem> v(m.cols(), F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = F.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hbn
