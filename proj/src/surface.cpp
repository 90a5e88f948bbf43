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

#include "hbn/surface.hpp"

#include <algorithm>
#include <string>

namespace hbn {

namespace {

// Sums over the summands O(b + im), i = 0..a, of the pushforward to the line.
int sections_of_pushforward(SurfaceDivisor d, int m) {
  int total = 0;
  for (int i = 0; i <= d.a; ++i) total += std::max(0, d.b + i * m + 1);
  return total;
}

int h1_of_pushforward(SurfaceDivisor d, int m) {
  int total = 0;
  for (int i = 0; i <= d.a; ++i) total += std::max(0, -(d.b + i * m) - 1);
  return total;
}

constexpr int kSearchLimit = 4096;

}  // namespace

int intersection(SurfaceDivisor x, SurfaceDivisor y, int m) { return x.a * y.a * m + x.a * y.b + x.b * y.a; }

SurfaceDivisor canonical_divisor(int m) { return {-2, m - 2}; }

SurfaceDivisor directrix(int m) { return {1, -m}; }

SurfaceDivisor curve_divisor(const HirzebruchClass& cls) { return {cls.k, cls.delta}; }

int h0_surface(SurfaceDivisor d, int m) { return d.a >= 0 ? sections_of_pushforward(d, m) : 0; }

int h1_surface(SurfaceDivisor d, int m) {
  if (d.a >= 0) return h1_of_pushforward(d, m);
  if (d.a == -1) return 0;
  return h1_of_pushforward(canonical_divisor(m) - d, m);
}

int h2_surface(SurfaceDivisor d, int m) { return h0_surface(canonical_divisor(m) - d, m); }

int connectedness(const HirzebruchClass& cls) {
  cls.validate();
  return 1 + h1_surface({-cls.k, -cls.delta}, cls.m);
}

std::optional<SplittingType> h0_profile_splitting(const HirzebruchClass& cls, SurfaceDivisor d) {
  cls.validate();
  const int m = cls.m;
  const SurfaceDivisor c = curve_divisor(cls);
  // h^0(C, O_C(d + nF)) from the restriction sequence. The alternating sum
  // is an upper bound, exact when h^1 of the twist vanishes; a nonpositive
  // bound also settles it.
  auto h = [&](int n) -> std::optional<int> {
    const SurfaceDivisor twisted{d.a, d.b + n};
    const int bound = h0_surface(twisted, m) - h0_surface(twisted - c, m) + h1_surface(twisted - c, m);
    if (bound <= 0) return 0;
    if (h1_surface(twisted, m) != 0) return std::nullopt;
    return bound;
  };
  // #{i : d_i >= -n}.
  auto count = [&](int n) -> std::optional<int> {
    const auto hi = h(n);
    if (hi && *hi == 0) return 0;
    const auto lo = h(n - 1);
    if (!hi || !lo) return std::nullopt;
    return *hi - *lo;
  };

  int top = std::max(0, -d.b);
  for (;; ++top) {
    if (top > kSearchLimit) return std::nullopt;
    const auto c_top = count(top);
    if (c_top && *c_top == cls.k) break;
  }
  std::vector<int> counts;  // counts[j] = count(top - j)
  for (int n = top;; --n) {
    if (top - n > kSearchLimit) return std::nullopt;
    const auto c_n = count(n);
    if (!c_n) return std::nullopt;
    counts.push_back(*c_n);
    if (*c_n == 0) break;
  }

  std::vector<int> degrees;
  for (std::size_t j = 0; j + 1 < counts.size(); ++j) {
    const int multiplicity = counts[j] - counts[j + 1];
    if (multiplicity < 0) {
      throw InternalInconsistency("twist profile decreases at n = " + std::to_string(top - static_cast<int>(j)));
    }
    const int degree = -(top - static_cast<int>(j));
    for (int r = 0; r < multiplicity; ++r) degrees.push_back(degree);
  }
  return SplittingType::canonical(std::move(degrees));
}

}  // namespace hbn
