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

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hbn/determinant.hpp"
#include "hbn/field.hpp"

namespace hbn {

/// Sparse polynomial in (s, t) over F_p. Keys are (s power, t power).
class BivariatePoly {
 public:
  using Elem = PrimeField::Elem;
  using Exponent = std::pair<int, int>;

  explicit BivariatePoly(PrimeField field) : field_(field) {}
  BivariatePoly(PrimeField field, std::map<Exponent, Elem> terms);

  static BivariatePoly constant(PrimeField field, Elem c) { return BivariatePoly(field, {{{0, 0}, c}}); }
  static BivariatePoly s(PrimeField field) { return BivariatePoly(field, {{{1, 0}, 1}}); }
  static BivariatePoly t(PrimeField field) { return BivariatePoly(field, {{{0, 1}, 1}}); }

  const PrimeField& field() const { return field_; }
  const std::map<Exponent, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Elem coeff(int s_power, int t_power) const;
  Elem evaluate(Elem s, Elem t) const;

  BivariatePoly operator-() const;
  BivariatePoly& operator+=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a += -b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  BivariatePoly scaled(Elem c) const;

  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

 private:
  PrimeField field_;
  std::map<Exponent, Elem> terms_;
};

/// Resultant in an auxiliary variable v of a = sum a[i] v^i and b = sum b[i] v^i
/// (lowest power first, coefficients in a commutative ring), as the Sylvester
/// determinant. Trailing zero coefficients are ignored. Throws when both
/// inputs are zero; returns zero when exactly one is.
template <class R>
R sylvester_resultant(std::vector<R> a, std::vector<R> b, const R& zero, const R& one) {
  auto trim = [&](std::vector<R>& v) {
    while (!v.empty() && v.back() == zero) v.pop_back();
  };
  trim(a);
  trim(b);
  if (a.empty() && b.empty()) throw std::invalid_argument("resultant of two zero polynomials");
  if (a.empty() || b.empty()) return zero;
  const std::size_t n = a.size() - 1;
  const std::size_t m = b.size() - 1;
  const std::size_t size = n + m;
  if (size == 0) return one;
  SquareMatrix<R> syl(size, std::vector<R>(size, zero));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) syl[r][r + i] = a[n - i];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) syl[m + r][r + i] = b[m - i];
  }
  return laplace_determinant(syl, one);
}

/// Res_v(a, b) for polynomials in v with coefficients in F_p[s, t].
BivariatePoly resultant(const std::vector<BivariatePoly>& a, const std::vector<BivariatePoly>& b);

}  // namespace hbn
