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

#include "hbn/field.hpp"

#include <stdexcept>
#include <string>

namespace hbn {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), barrett_(p == 0 ? 0 : ~std::uint64_t{0} / p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                std::to_string(p));
  }
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r < 0 ? r + p_ : r);
}

std::int64_t PrimeField::to_signed(Elem a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

PrimeField::Elem PrimeField::random(Rng& rng) const {
  return std::uniform_int_distribution<Elem>(0, p_ - 1)(rng);
}

PrimeField::Elem PrimeField::random_nonzero(Rng& rng) const {
  return std::uniform_int_distribution<Elem>(1, p_ - 1)(rng);
}

bool PrimeField::is_square(Elem a) const { return a == 0 || pow(a, (p_ - 1) / 2) == 1; }

PrimeField::Elem PrimeField::nonresidue() const {
  Elem z = 2;
  while (is_square(z)) ++z;
  return z;
}

// Tonelli-Shanks.
PrimeField::Elem PrimeField::sqrt(Elem a) const {
  if (a == 0) return 0;
  if (!is_square(a)) throw std::domain_error("not a square in F_p");
  std::uint32_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Elem c = pow(nonresidue(), q);
  Elem x = pow(a, (q + 1) / 2);
  Elem t = pow(a, q);
  int m = s;
  while (t != 1) {
    int i = 0;
    Elem t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    Elem b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
    x = mul(x, b);
    c = mul(b, b);
    t = mul(t, c);
    m = i;
  }
  return x;
}

QuadraticExtension::QuadraticExtension(PrimeField base)
    : base_(base), nonresidue_(base.nonresidue()) {}

Fp2Elem QuadraticExtension::mul(Elem a, Elem b) const {
  const auto& F = base_;
  const auto re = F.add(F.mul(a.re, b.re), F.mul(nonresidue_, F.mul(a.im, b.im)));
  const auto im = F.add(F.mul(a.re, b.im), F.mul(a.im, b.re));
  return {re, im};
}

Fp2Elem QuadraticExtension::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

// (re + im w)^{-1} = (re - im w) / (re^2 - n im^2).
Fp2Elem QuadraticExtension::inv(Elem a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in F_p^2");
  const auto& F = base_;
  const auto norm = F.sub(F.mul(a.re, a.re), F.mul(nonresidue_, F.mul(a.im, a.im)));
  const auto n_inv = F.inv(norm);
  return {F.mul(a.re, n_inv), F.mul(F.neg(a.im), n_inv)};
}

Fp2Elem QuadraticExtension::random_nonzero(Rng& rng) const {
  for (;;) {
    const Elem a = random(rng);
    if (!is_zero(a)) return a;
  }
}

}  // namespace hbn
