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

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hbn {

template <class R>
using SquareMatrix = std::vector<std::vector<R>>;

/// Determinant over a commutative ring by Laplace expansion with memoized
/// minors: minor[S] is the determinant of the first |S| rows restricted to the
/// column set S. Costs n 2^n ring products; intended for n <= 16.
template <class R>
R laplace_determinant(const SquareMatrix<R>& m, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n > 20) throw std::invalid_argument("matrix too large for Laplace expansion");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::optional<R>> minor(std::size_t{1} << n);
  minor[0] = one;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!minor[mask]) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t bit = 1u << j;
      if (mask & bit) continue;
      // Sign of placing column j among the columns already in the minor.
      const bool negative = (std::popcount(mask >> j) & 1) != 0;
      R term = m[row][j] * *minor[mask];
      auto& slot = minor[mask | bit];
      if (negative) {
        if (slot) {
          *slot = *slot - term;
        } else {
          slot = -term;
        }
      } else {
        if (slot) {
          *slot = *slot + term;
        } else {
          slot = std::move(term);
        }
      }
    }
    minor[mask].reset();
  }
  return *minor[full];
}

}  // namespace hbn
