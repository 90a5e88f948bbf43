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

#include <compare>
#include <cstdint>
#include <random>

namespace hbn {

using Rng = std::mt19937_64;

/// Prime field F_p with 2 < p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint32_t kDefaultPrime = 10007;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return reduce(static_cast<std::uint64_t>(a) * b); }
  /// x mod p by Barrett reduction.
  Elem reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    auto r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<Elem>(r);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2].
  std::int64_t to_signed(Elem a) const;
  Elem embed(Elem a) const { return a; }

  Elem random(Rng& rng) const;
  Elem random_nonzero(Rng& rng) const;

  bool is_square(Elem a) const;
  /// Square root of a square; throws std::domain_error otherwise.
  Elem sqrt(Elem a) const;
  /// Smallest non-square.
  Elem nonresidue() const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

bool is_prime(std::uint64_t n);

struct Fp2Elem {
  std::uint32_t re = 0;
  std::uint32_t im = 0;
  auto operator<=>(const Fp2Elem&) const = default;
};

/// F_{p^2} = F_p[w] / (w^2 - n) with n the smallest non-square.
class QuadraticExtension {
 public:
  using Elem = Fp2Elem;

  explicit QuadraticExtension(PrimeField base);

  const PrimeField& base() const { return base_; }
  std::uint64_t order() const {
    return static_cast<std::uint64_t>(base_.characteristic()) * base_.characteristic();
  }

  Elem zero() const { return {}; }
  Elem one() const { return {1, 0}; }
  bool is_zero(Elem a) const { return a.re == 0 && a.im == 0; }
  Elem embed(PrimeField::Elem a) const { return {a, 0}; }
  bool in_base(Elem a) const { return a.im == 0; }

  Elem add(Elem a, Elem b) const { return {base_.add(a.re, b.re), base_.add(a.im, b.im)}; }
  Elem sub(Elem a, Elem b) const { return {base_.sub(a.re, b.re), base_.sub(a.im, b.im)}; }
  Elem neg(Elem a) const { return {base_.neg(a.re), base_.neg(a.im)}; }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem random(Rng& rng) const { return {base_.random(rng), base_.random(rng)}; }
  Elem random_nonzero(Rng& rng) const;

  bool operator==(const QuadraticExtension&) const = default;

 private:
  PrimeField base_;
  PrimeField::Elem nonresidue_;
};

}  // namespace hbn
