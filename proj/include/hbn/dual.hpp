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

#include <optional>
#include <utility>

#include "hbn/binary_form.hpp"

namespace hbn {

/// value + eps * epsilon with epsilon^2 = 0.
///
/// An absent epsilon part means zero. This lets the epsilon part carry a
/// degree offset from the value without a typed zero on every entry.
template <class T>
struct Dual {
  T value;
  std::optional<T> eps;

  explicit Dual(T v) : value(std::move(v)) {}
  Dual(T v, T e) : value(std::move(v)), eps(std::move(e)) {}

  Dual operator-() const {
    Dual r(-value);
    if (eps) r.eps = -*eps;
    return r;
  }
  Dual& operator+=(const Dual& o) {
    value += o.value;
    if (o.eps) {
      if (eps) {
        *eps += *o.eps;
      } else {
        eps = o.eps;
      }
    }
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a += -b; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.value * b.value);
    if (a.eps) r.eps = *a.eps * b.value;
    if (b.eps) {
      auto t = a.value * *b.eps;
      if (r.eps) {
        *r.eps += t;
      } else {
        r.eps = std::move(t);
      }
    }
    return r;
  }
};

using DualForm = Dual<BinaryForm>;

}  // namespace hbn
