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

#include "hbn/birkhoff.hpp"

#include <algorithm>
#include <stdexcept>

#include "hbn/determinant.hpp"
#include "hbn/linalg.hpp"

namespace hbn {

namespace {

using WPoly = Poly<PrimeField>;
using WMatrix = std::vector<std::vector<WPoly>>;

std::size_t checked_size(const TransitionMatrix& t) {
  const std::size_t r = t.size();
  if (r == 0) throw std::invalid_argument("empty transition matrix");
  for (const auto& row : t) {
    if (row.size() != r) throw std::invalid_argument("transition matrix must be square");
  }
  return r;
}

int column_degree(const WMatrix& m, std::size_t j) {
  int d = -1;
  for (const auto& row : m) d = std::max(d, row[j].degree());
  return d;
}

}  // namespace

LaurentPoly::LaurentPoly(int low, Poly<PrimeField> body) : low_(low), body_(std::move(body)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(PrimeField field, int power, Elem c) {
  return LaurentPoly(power, Poly<PrimeField>::constant(field, c % field.characteristic()));
}

LaurentPoly LaurentPoly::from_inverse(const Poly<PrimeField>& in_w) {
  if (in_w.is_zero()) return LaurentPoly(in_w.field());
  const auto& c = in_w.coefficients();
  return LaurentPoly(-in_w.degree(), Poly<PrimeField>(in_w.field(), {c.rbegin(), c.rend()}));
}

bool LaurentPoly::is_monomial() const {
  return !is_zero() && body_.degree() == 0;
}

Poly<PrimeField> LaurentPoly::to_inverse(int shift) const {
  if (is_zero()) return Poly<PrimeField>(field());
  if (shift < max_power()) throw std::invalid_argument("shift below the top exponent");
  // z^e becomes w^{shift - e}.
  std::vector<Elem> v(static_cast<std::size_t>(shift - low_) + 1, 0);
  for (int e = low_; e <= max_power(); ++e) v[static_cast<std::size_t>(shift - e)] = coeff(e);
  return Poly<PrimeField>(field(), std::move(v));
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    low_ = 0;
    return;
  }
  int skip = 0;
  while (body_.field().is_zero(body_.coeff(skip))) ++skip;
  if (skip == 0) return;
  const auto& c = body_.coefficients();
  body_ = Poly<PrimeField>(body_.field(), {c.begin() + skip, c.end()});
  low_ += skip;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int low = std::min(low_, o.low_);
  body_ = body_.shifted(low_ - low) + o.body_.shifted(o.low_ - low);
  low_ = low;
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field());
  return LaurentPoly(a.low_ + b.low_, a.body_ * b.body_);
}

TransitionMatrix matrix_product(const TransitionMatrix& a, const TransitionMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  const PrimeField field = a.front().front().field();
  TransitionMatrix r(n, std::vector<LaurentPoly>(cols, LaurentPoly(field)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t l = 0; l < inner; ++l) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

LaurentPoly matrix_det(const TransitionMatrix& m) {
  checked_size(m);
  const PrimeField field = m.front().front().field();
  return laplace_determinant(m, LaurentPoly::monomial(field, 0, 1));
}

BirkhoffFactorization birkhoff_factorize(const TransitionMatrix& t) {
  const std::size_t r = checked_size(t);
  const PrimeField F = t.front().front().field();
  if (!matrix_det(t).is_monomial()) {
    throw std::invalid_argument("transition matrix is not invertible away from 0 and infinity");
  }

  // M = w^N T^T is polynomial in w = 1/z. Column-reducing M over F[w] gives
  // M U = K with K column reduced; transposing back yields the factorization.
  int top = 0;
  for (const auto& row : t) {
    for (const auto& e : row) {
      if (!e.is_zero()) top = std::max(top, e.max_power());
    }
  }
  WMatrix m(r, std::vector<WPoly>(r, WPoly(F)));
  WMatrix u(r, std::vector<WPoly>(r, WPoly(F)));
  WMatrix u_inv(r, std::vector<WPoly>(r, WPoly(F)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = t[j][i].to_inverse(top);
    u[i][i] = WPoly::constant(F, 1);
    u_inv[i][i] = WPoly::constant(F, 1);
  }

  std::vector<int> kappa(r);
  for (;;) {
    for (std::size_t j = 0; j < r; ++j) {
      kappa[j] = column_degree(m, j);
      if (kappa[j] < 0) throw std::invalid_argument("singular transition matrix");
    }
    FpMatrix lead(F, r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) lead(i, j) = m[i][j].coeff(kappa[j]);
    }
    const auto kernel = kernel_basis(lead);
    if (kernel.empty()) break;
    const auto& c = kernel.front();
    std::size_t pivot = r;
    for (std::size_t j = 0; j < r; ++j) {
      if (c[j] != 0 && (pivot == r || kappa[j] > kappa[pivot])) pivot = j;
    }
    // col_pivot <- sum_j (c_j / c_pivot) w^{kappa_pivot - kappa_j} col_j, which
    // cancels the leading terms of col_pivot.
    std::vector<WPoly> mult(r, WPoly(F));
    for (std::size_t j = 0; j < r; ++j) {
      if (j == pivot || c[j] == 0) continue;
      mult[j] = WPoly::monomial(F, kappa[pivot] - kappa[j], F.div(c[j], c[pivot]));
    }
    for (auto* mat : {&m, &u}) {
      for (auto& row : *mat) {
        for (std::size_t j = 0; j < r; ++j) {
          if (!mult[j].is_zero()) row[pivot] += mult[j] * row[j];
        }
      }
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (mult[j].is_zero()) continue;
      for (std::size_t l = 0; l < r; ++l) u_inv[j][l] -= mult[j] * u_inv[pivot][l];
    }
  }

  BirkhoffFactorization out;
  out.left.assign(r, std::vector<LaurentPoly>(r, LaurentPoly(F)));
  out.right.assign(r, std::vector<LaurentPoly>(r, LaurentPoly(F)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      out.left[i][j] = LaurentPoly::from_inverse(u_inv[j][i]);
      // K[j][i] w^{-kappa_i} written in z.
      out.right[i][j] = LaurentPoly::from_inverse(m[j][i]) * LaurentPoly::monomial(F, kappa[i], 1);
    }
  }
  for (std::size_t j = 0; j < r; ++j) out.exponents.push_back(top - kappa[j]);
  out.splitting = out.exponents;
  std::sort(out.splitting.begin(), out.splitting.end());
  return out;
}

std::vector<int> birkhoff_splitting(const TransitionMatrix& t) { return birkhoff_factorize(t).splitting; }

}  // namespace hbn
