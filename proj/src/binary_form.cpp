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

#include "hbn/binary_form.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hbn {

BinaryForm::BinaryForm(PrimeField field, int degree, std::vector<Elem> coeffs)
    : field_(field), degree_(degree), c_(std::move(coeffs)) {
  const std::size_t expected = degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1;
  if (c_.size() != expected) {
    throw std::invalid_argument("form of degree " + std::to_string(degree) + " needs " +
                                std::to_string(expected) + " coefficients, got " +
                                std::to_string(c_.size()));
  }
  for (auto& v : c_) {
    if (v >= field_.characteristic()) v %= field_.characteristic();
  }
  refresh_zero();
}

BinaryForm BinaryForm::zero(PrimeField field, int degree) {
  return BinaryForm(field, degree,
                    std::vector<Elem>(degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1, 0));
}

BinaryForm BinaryForm::monomial(PrimeField field, int degree, int t_power, Elem c) {
  if (t_power < 0 || t_power > degree) throw std::out_of_range("monomial exponent out of range");
  auto f = zero(field, degree);
  f.c_[static_cast<std::size_t>(t_power)] = c % field.characteristic();
  f.refresh_zero();
  return f;
}

BinaryForm BinaryForm::random(PrimeField field, int degree, Rng& rng) {
  auto f = zero(field, degree);
  for (auto& v : f.c_) v = field.random(rng);
  f.refresh_zero();
  return f;
}

BinaryForm BinaryForm::from_roots(PrimeField field, const std::vector<Elem>& roots) {
  auto f = constant(field, 1);
  for (auto r : roots) f = f * BinaryForm(field, 1, {field.neg(r), 1});
  return f;
}

BinaryForm::Elem BinaryForm::coeff(int t_power) const {
  return t_power >= 0 && t_power <= degree_ ? c_[static_cast<std::size_t>(t_power)] : 0;
}

BinaryForm::Elem BinaryForm::evaluate(Elem s, Elem t) const {
  // Horner in t, from c_d down; c_i picks up s^{d-i}.
  Elem acc = 0;
  Elem s_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = field_.add(acc, field_.mul(*it, s_pow));
    s_pow = field_.mul(s_pow, s);
    if (it + 1 != c_.rend()) acc = field_.mul(acc, t);
  }
  return acc;
}

Poly<PrimeField> BinaryForm::at_s_one() const { return Poly<PrimeField>(field_, c_); }

Poly<PrimeField> BinaryForm::at_t_one() const {
  return Poly<PrimeField>(field_, std::vector<Elem>(c_.rbegin(), c_.rend()));
}

void BinaryForm::check_compatible(const BinaryForm& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("forms over different fields");
  if (degree_ != o.degree_) {
    throw std::invalid_argument("adding forms of degrees " + std::to_string(degree_) + " and " +
                                std::to_string(o.degree_));
  }
}

void BinaryForm::refresh_zero() {
  zero_ = true;
  for (auto v : c_) {
    if (v != 0) {
      zero_ = false;
      break;
    }
  }
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& v : r.c_) v = field_.neg(v);
  return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  check_compatible(o);
  if (o.zero_) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  refresh_zero();
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  check_compatible(o);
  if (o.zero_) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  refresh_zero();
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("forms over different fields");
  const int degree = a.degree_ + b.degree_;
  if (a.zero_ || b.zero_) return BinaryForm::zero(a.field_, degree);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(degree) + 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const std::uint64_t ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = a.field_.reduce(acc[i + j] + ai * b.c_[j]);
    }
  }
  std::vector<BinaryForm::Elem> out(acc.begin(), acc.end());
  return BinaryForm(a.field_, degree, std::move(out));
}

BinaryForm BinaryForm::scaled(Elem s) const {
  BinaryForm r = *this;
  for (auto& v : r.c_) v = field_.mul(v, s);
  r.refresh_zero();
  return r;
}

XYForm::XYForm(std::vector<BinaryForm> by_x_power) : c_(std::move(by_x_power)) {
  if (c_.empty()) throw std::invalid_argument("xy-form needs at least one coefficient");
}

XYForm XYForm::linear(BinaryForm a_coeff, BinaryForm b_coeff) {
  return XYForm({std::move(b_coeff), std::move(a_coeff)});
}

bool XYForm::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

XYForm XYForm::operator-() const {
  XYForm r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

XYForm& XYForm::operator+=(const XYForm& o) {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("adding xy-forms of different degree");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

XYForm operator*(const XYForm& a, const XYForm& b) {
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  std::vector<std::optional<BinaryForm>> acc(n);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      auto term = a.c_[i] * b.c_[j];
      if (acc[i + j]) {
        *acc[i + j] += term;
      } else {
        acc[i + j] = std::move(term);
      }
    }
  }
  std::vector<BinaryForm> out;
  out.reserve(n);
  for (auto& f : acc) out.push_back(std::move(*f));
  return XYForm(std::move(out));
}

}  // namespace hbn
