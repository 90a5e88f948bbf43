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

#include "dense_pencil.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hbn::detail {

namespace {

int homogeneous_degree(const DegreeGrid& grid, const std::vector<int>& rows, const std::vector<int>& cols,
                       std::size_t x_power) {
  int total = 0;
  for (int r : rows) total += grid.f()[static_cast<std::size_t>(r)];
  for (int c : cols) total -= grid.e()[static_cast<std::size_t>(grid.k() - 1 - c)];
  return total + static_cast<int>(rows.size() - x_power) * grid.m();
}

// dst += sign * form * src shifted by x_shift in x, over the first
// `x_count` x-powers of src.
void add_product(const PrimeField& F, const DenseXT& src, std::size_t x_count, std::size_t t_count,
                 const BinaryForm& form, std::size_t x_shift, bool negative, DenseXT& dst) {
  if (form.is_zero()) return;
  const auto& fc = form.coefficients();
  const std::uint64_t p = F.characteristic();
  const std::size_t width = src.width;
  for (std::size_t xp = 0; xp < x_count; ++xp) {
    const std::uint64_t* in = &src.c[xp * width];
    std::uint64_t* out = &dst.c[(xp + x_shift) * width];
    for (std::size_t q = 0; q < t_count; ++q) {
      if (in[q] == 0) continue;
      const std::size_t span = std::min(fc.size(), width - q);
      for (std::size_t u = 0; u < span; ++u) {
        const std::uint64_t term = F.reduce(in[q] * fc[u]);
        out[q + u] += negative ? p - term : term;
      }
    }
  }
}

}  // namespace

std::vector<int> index_range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

std::vector<DenseXT> column_subset_minors(const MatrixPair& pair, const std::vector<int>& rows,
                                          const std::vector<int>& cols) {
  const auto& F = pair.field;
  const auto& grid = pair.grid;
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = cols.size();
  if (n_cols > 20 || n_rows > n_cols) throw std::invalid_argument("bad block for pencil minors");
  // t-degree bounds of minors on the first r rows: partial sums of row maxima.
  std::vector<std::size_t> t_count{1};
  for (int r : rows) {
    int row_max = 0;
    for (int c : cols) row_max = std::max({row_max, grid.a(r, c), grid.b(r, c)});
    t_count.push_back(t_count.back() + static_cast<std::size_t>(row_max));
  }
  const std::size_t width = t_count.back();
  const std::size_t size = (n_rows + 1) * width;

  std::vector<DenseXT> minor(std::size_t{1} << n_cols);
  minor[0] = {n_rows, width, std::vector<std::uint64_t>(size, 0)};
  minor[0].c[0] = 1;
  for (std::uint32_t mask = 0; mask < minor.size(); ++mask) {
    if (minor[mask].empty()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n_rows) continue;
    for (std::size_t jj = 0; jj < n_cols; ++jj) {
      const std::uint32_t bit = 1u << jj;
      if (mask & bit) continue;
      const auto r = static_cast<std::size_t>(rows[row]);
      const auto c = static_cast<std::size_t>(cols[jj]);
      const auto& ea = pair.a[r][c];
      const auto& eb = pair.b[r][c];
      if (ea.is_zero() && eb.is_zero()) continue;
      auto& dst = minor[mask | bit];
      if (dst.empty()) dst = {n_rows, width, std::vector<std::uint64_t>(size, 0)};
      const bool negative = (std::popcount(mask >> jj) & 1) != 0;
      add_product(F, minor[mask], row + 1, t_count[row], ea, 1, negative, dst);
      add_product(F, minor[mask], row + 1, t_count[row], eb, 0, negative, dst);
      for (std::size_t xp = 0; xp <= row + 1; ++xp) {
        for (std::size_t q = 0; q < t_count[row + 1]; ++q) dst.c[xp * width + q] = F.reduce(dst.c[xp * width + q]);
      }
    }
    if (mask != 0) minor[mask] = {};
  }
  return minor;
}

XYForm block_form(const MatrixPair& pair, const DenseXT& det, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
  std::vector<BinaryForm> coeffs;
  for (std::size_t xp = 0; xp <= rows.size(); ++xp) {
    const int degree = homogeneous_degree(pair.grid, rows, cols, xp);
    std::vector<PrimeField::Elem> c(degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1, 0);
    if (!det.empty()) {
      for (std::size_t q = 0; q < det.width; ++q) {
        const auto v = static_cast<PrimeField::Elem>(det.at(xp, q));
        if (v == 0) continue;
        if (static_cast<int>(q) > degree) {
          throw InternalInconsistency("determinant coefficient of x^" + std::to_string(xp) + " exceeds its degree");
        }
        c[q] = v;
      }
    }
    coeffs.emplace_back(pair.field, degree, std::move(c));
  }
  return XYForm(std::move(coeffs));
}

XYForm block_determinant(const MatrixPair& pair, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("block determinant needs a square block");
  const auto minors = column_subset_minors(pair, rows, cols);
  return block_form(pair, minors.back(), rows, cols);
}

std::vector<std::vector<DenseXT>> dense_cofactors(const MatrixPair& pair) {
  const int k = pair.k();
  const auto all = index_range(0, k);
  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::vector<DenseXT>> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    auto rows = all;
    rows.erase(rows.begin() + i);
    auto minors = column_subset_minors(pair, rows, all);
    for (int j = 0; j < k; ++j) {
      auto cof = std::move(minors[full & ~(1u << j)]);
      if ((i + j) % 2 && !cof.empty()) {
        const std::uint64_t p = pair.field.characteristic();
        for (auto& v : cof.c) v = v == 0 ? 0 : p - v;
      }
      out[static_cast<std::size_t>(i)].push_back(std::move(cof));
    }
  }
  return out;
}

}  // namespace hbn::detail
