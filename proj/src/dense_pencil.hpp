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

// Minors of the pencil Ax + By on dense coefficient arrays in (x, t) with
// y = s = 1. Internal to the library.

#include <cstdint>
#include <vector>

#include "hbn/wood.hpp"

namespace hbn::detail {

/// Coefficients of sum c[p][q] x^p t^q, p <= x_degree, q < width, reduced mod p.
struct DenseXT {
  std::size_t x_degree = 0;
  std::size_t width = 0;
  std::vector<std::uint64_t> c;

  std::uint64_t at(std::size_t p, std::size_t q) const { return c[p * width + q]; }
  bool empty() const { return c.empty(); }
};

/// Determinants of the pencil on `rows` against every column subset of
/// `cols` of the same size, indexed by bitmask over positions in `cols`.
/// Masks of other sizes are left empty, as are structurally zero minors.
std::vector<DenseXT> column_subset_minors(const MatrixPair& pair, const std::vector<int>& rows,
                                          const std::vector<int>& cols);

/// Rehomogenizes a block determinant; throws InternalInconsistency when a
/// coefficient exceeds its degree.
XYForm block_form(const MatrixPair& pair, const DenseXT& det, const std::vector<int>& rows,
                  const std::vector<int>& cols);

/// Determinant of a square block as an xy-form.
XYForm block_determinant(const MatrixPair& pair, const std::vector<int>& rows, const std::vector<int>& cols);

/// Signed cofactors C(i, j) of the full pencil, dense.
std::vector<std::vector<DenseXT>> dense_cofactors(const MatrixPair& pair);

std::vector<int> index_range(int lo, int hi);

}  // namespace hbn::detail
