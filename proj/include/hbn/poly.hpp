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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hbn/field.hpp"

namespace hbn {

/// Dense univariate polynomial over a finite field, lowest power first,
/// with no trailing zero coefficients.
template <class Field>
class Poly {
 public:
  using Elem = typename Field::Elem;

  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(Field field, Elem c) { return Poly(field, {c}); }
  static Poly monomial(Field field, int power, Elem c) {
    std::vector<Elem> v(static_cast<std::size_t>(power) + 1, field.zero());
    v.back() = c;
    return Poly(field, std::move(v));
  }
  /// The polynomial X.
  static Poly x(Field field) { return monomial(field, 1, field.one()); }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)]
                                                    : field_.zero();
  }
  Elem leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Elem operator()(Elem at) const {
    Elem acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = field_.neg(v);
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const auto& F = a.field_;
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (F.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
      }
    }
    return Poly(F, std::move(r));
  }
  Poly scaled(Elem s) const {
    Poly r = *this;
    for (auto& v : r.c_) v = field_.mul(v, s);
    r.trim();
    return r;
  }
  /// Multiply by X^n.
  Poly shifted(int n) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(static_cast<std::size_t>(n), field_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
  }

  Poly derivative() const {
    std::vector<Elem> v;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      v.push_back(field_.mul(c_[i], field_embed_int(static_cast<std::int64_t>(i))));
    }
    return Poly(field_, std::move(v));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
  }

  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }
  Elem field_embed_int(std::int64_t v) const;

  Field field_;
  std::vector<Elem> c_;
};

template <>
inline PrimeField::Elem Poly<PrimeField>::field_embed_int(std::int64_t v) const {
  return field_.from_int(v);
}
template <>
inline Fp2Elem Poly<QuadraticExtension>::field_embed_int(std::int64_t v) const {
  return field_.embed(field_.base().from_int(v));
}

/// Quotient and remainder; throws std::domain_error when dividing by zero.
template <class Field>
std::pair<Poly<Field>, Poly<Field>> divmod(const Poly<Field>& a, const Poly<Field>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& F = a.field();
  if (a.degree() < b.degree()) return {Poly<Field>(F), a};
  std::vector<typename Field::Elem> rem = a.coefficients();
  std::vector<typename Field::Elem> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                                        F.zero());
  const auto lead_inv = F.inv(b.leading());
  const auto& bc = b.coefficients();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const auto c = F.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    quo[static_cast<std::size_t>(i - b.degree())] = c;
    if (F.is_zero(c)) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - b.degree()) + j];
      slot = F.sub(slot, F.mul(c, bc[j]));
    }
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {Poly<Field>(F, std::move(quo)), Poly<Field>(F, std::move(rem))};
}

template <class Field>
Poly<Field> operator%(const Poly<Field>& a, const Poly<Field>& b) {
  return divmod(a, b).second;
}

template <class Field>
Poly<Field> operator/(const Poly<Field>& a, const Poly<Field>& b) {
  return divmod(a, b).first;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class Field>
Poly<Field> gcd(Poly<Field> a, Poly<Field> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^e mod modulus.
template <class Field>
Poly<Field> powmod(Poly<Field> base, std::uint64_t e, const Poly<Field>& modulus) {
  const auto& F = base.field();
  Poly<Field> result = Poly<Field>::constant(F, F.one()) % modulus;
  base = base % modulus;
  while (e != 0) {
    if (e & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    e >>= 1;
  }
  return result;
}

namespace detail {

template <class Field>
void split_linear_factors(const Poly<Field>& g, Rng& rng, std::vector<typename Field::Elem>& out) {
  const auto& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(F.neg(F.div(g.coeff(0), g.coeff(1))));
    return;
  }
  const std::uint64_t half = (F.order() - 1) / 2;
  for (;;) {
    const auto shift = Poly<Field>(F, {F.random(rng), F.one()});
    auto h = powmod(shift, half, g) - Poly<Field>::constant(F, F.one());
    h = gcd(h, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear_factors(h, rng, out);
      split_linear_factors(g / h, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Distinct roots of f lying in the field itself (Cantor-Zassenhaus), sorted.
template <class Field>
std::vector<typename Field::Elem> roots(const Poly<Field>& f, Rng& rng) {
  std::vector<typename Field::Elem> out;
  if (f.degree() <= 0) return out;
  const auto& F = f.field();
  const auto m = f.monic();
  const auto x = Poly<Field>::x(F);
  const auto split_part = gcd(m, powmod(x, F.order(), m) - x);
  detail::split_linear_factors(split_part, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Lift a polynomial over F_p to F_{p^2}.
inline Poly<QuadraticExtension> lift(const QuadraticExtension& ext, const Poly<PrimeField>& f) {
  std::vector<Fp2Elem> v;
  v.reserve(f.coefficients().size());
  for (auto c : f.coefficients()) v.push_back(ext.embed(c));
  return Poly<QuadraticExtension>(ext, std::move(v));
}

/// Interpolate the polynomial of degree < xs.size() through (xs[i], ys[i]) (Newton form).
template <class Field>
Poly<Field> interpolate(const Field& F, const std::vector<typename Field::Elem>& xs,
                        const std::vector<typename Field::Elem>& ys) {
  const std::size_t n = xs.size();
  std::vector<typename Field::Elem> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = F.div(F.sub(dd[i], dd[i - 1]), F.sub(xs[i], xs[i - level]));
    }
  }
  Poly<Field> result(F);
  for (std::size_t i = n; i-- > 0;) {
    result = result * Poly<Field>(F, {F.neg(xs[i]), F.one()}) + Poly<Field>::constant(F, dd[i]);
  }
  return result;
}

}  // namespace hbn
