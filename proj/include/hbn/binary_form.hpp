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

/// Homogeneous form of a declared degree d in (s, t): sum c_i s^{d-i} t^i.
///
/// A form of negative declared degree has no coefficients and is zero. A zero
/// form keeps its declared degree, so forced-zero entries still take part in
/// degree bookkeeping.
class BinaryForm {
 public:
  using Elem = PrimeField::Elem;

  BinaryForm(PrimeField field, int degree, std::vector<Elem> coeffs);

  static BinaryForm zero(PrimeField field, int degree);
  static BinaryForm constant(PrimeField field, Elem c) { return BinaryForm(field, 0, {c}); }
  /// c s^{degree - t_power} t^{t_power}.
  static BinaryForm monomial(PrimeField field, int degree, int t_power, Elem c);
  /// Uniform over all forms of the given degree; zero form if degree < 0.
  static BinaryForm random(PrimeField field, int degree, Rng& rng);
  /// Product of (t - r s) over the given roots.
  static BinaryForm from_roots(PrimeField field, const std::vector<Elem>& roots);

  const PrimeField& field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Elem>& coefficients() const { return c_; }
  Elem coeff(int t_power) const;
  bool is_zero() const { return zero_; }

  Elem evaluate(Elem s, Elem t) const;
  /// Value at (1, t) for t in an extension of the base field.
  template <class Ext>
  typename Ext::Elem evaluate_affine(const Ext& ext, typename Ext::Elem t) const {
    auto acc = ext.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ext.add(ext.mul(acc, t), ext.embed(*it));
    return acc;
  }

  /// Chart s = 1: the polynomial sum c_i t^i.
  Poly<PrimeField> at_s_one() const;
  /// Chart t = 1: the polynomial sum c_i s^{d-i}.
  Poly<PrimeField> at_t_one() const;

  BinaryForm operator-() const;
  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  BinaryForm scaled(Elem s) const;

  bool operator==(const BinaryForm& o) const {
    return field_ == o.field_ && degree_ == o.degree_ && c_ == o.c_;
  }

 private:
  void check_compatible(const BinaryForm& o) const;
  void refresh_zero();

  PrimeField field_;
  int degree_;
  std::vector<Elem> c_;
  bool zero_ = true;
};

inline BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b) { return a * b; }

/// Form homogeneous of degree n in (x, y) with BinaryForm coefficients:
/// sum_i coeff[i] x^i y^{n-i}.
class XYForm {
 public:
  explicit XYForm(std::vector<BinaryForm> by_x_power);

  /// A x + B y.
  static XYForm linear(BinaryForm a_coeff, BinaryForm b_coeff);
  static XYForm constant(BinaryForm c) { return XYForm({std::move(c)}); }

  int xy_degree() const { return static_cast<int>(c_.size()) - 1; }
  const BinaryForm& coeff(int x_power) const { return c_.at(static_cast<std::size_t>(x_power)); }
  const std::vector<BinaryForm>& coefficients() const { return c_; }
  bool is_zero() const;

  XYForm operator-() const;
  XYForm& operator+=(const XYForm& o);
  friend XYForm operator+(XYForm a, const XYForm& b) { return a += b; }
  friend XYForm operator-(XYForm a, const XYForm& b) { return a += -b; }
  friend XYForm operator*(const XYForm& a, const XYForm& b);

  bool operator==(const XYForm& o) const { return c_ == o.c_; }

 private:
  std::vector<BinaryForm> c_;
};

}  // namespace hbn
