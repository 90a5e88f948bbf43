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

#include <vector>

#include "hbn/field.hpp"
#include "hbn/poly.hpp"

namespace hbn {

/// Laurent polynomial z^low * body(z) over F_p, normalized so that body(0) != 0
/// unless the polynomial is zero.
class LaurentPoly {
 public:
  using Elem = PrimeField::Elem;

  explicit LaurentPoly(PrimeField field) : body_(field) {}
  LaurentPoly(int low, Poly<PrimeField> body);

  static LaurentPoly monomial(PrimeField field, int power, Elem c);
  /// sum c_i z^{-i} from a polynomial in w = 1/z.
  static LaurentPoly from_inverse(const Poly<PrimeField>& in_w);

  const PrimeField& field() const { return body_.field(); }
  bool is_zero() const { return body_.is_zero(); }
  /// Lowest and highest exponents; undefined for zero.
  int min_power() const { return low_; }
  int max_power() const { return low_ + body_.degree(); }
  Elem coeff(int power) const { return body_.coeff(power - low_); }
  bool is_monomial() const;

  /// w^shift * (this with z = 1/w) as a polynomial in w; requires shift >= max_power().
  Poly<PrimeField> to_inverse(int shift) const;

  LaurentPoly operator-() const { return LaurentPoly(low_, -body_); }
  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a += -b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const {
    return body_ == o.body_ && (body_.is_zero() || low_ == o.low_);
  }

 private:
  void normalize();

  int low_ = 0;
  Poly<PrimeField> body_;
};

using TransitionMatrix = std::vector<std::vector<LaurentPoly>>;

TransitionMatrix matrix_product(const TransitionMatrix& a, const TransitionMatrix& b);
LaurentPoly matrix_det(const TransitionMatrix& m);

/// T = left * diag(z^exponents) * right with left invertible over F[1/z] and
/// right invertible over F[z].
struct BirkhoffFactorization {
  TransitionMatrix left;
  std::vector<int> exponents;
  TransitionMatrix right;
  /// exponents sorted ascending: the splitting type.
  std::vector<int> splitting;
};

/// Throws std::invalid_argument unless det T is a nonzero monomial.
BirkhoffFactorization birkhoff_factorize(const TransitionMatrix& t);
std::vector<int> birkhoff_splitting(const TransitionMatrix& t);

}  // namespace hbn
