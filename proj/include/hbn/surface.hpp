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

#include "hbn/splitting.hpp"

namespace hbn {

/// Divisor class aH + bF on F_m, where H^2 = m, H.F = 1, F^2 = 0.
struct SurfaceDivisor {
  int a = 0;
  int b = 0;

  friend SurfaceDivisor operator+(SurfaceDivisor x, SurfaceDivisor y) { return {x.a + y.a, x.b + y.b}; }
  friend SurfaceDivisor operator-(SurfaceDivisor x, SurfaceDivisor y) { return {x.a - y.a, x.b - y.b}; }
  auto operator<=>(const SurfaceDivisor&) const = default;
};

int intersection(SurfaceDivisor x, SurfaceDivisor y, int m);
SurfaceDivisor canonical_divisor(int m);
/// The negative section H - mF.
SurfaceDivisor directrix(int m);
SurfaceDivisor curve_divisor(const HirzebruchClass& cls);

int h0_surface(SurfaceDivisor d, int m);
int h1_surface(SurfaceDivisor d, int m);
int h2_surface(SurfaceDivisor d, int m);

/// h^0(O_C) for a curve in the class; 1 exactly when C is connected.
int connectedness(const HirzebruchClass& cls);

/// Splitting type of the pushforward of O_C(d) along the ruling, read off
/// from twists by fibers. Empty when the restriction sequence cannot be used
/// on a twist that the reconstruction needs.
std::optional<SplittingType> h0_profile_splitting(const HirzebruchClass& cls, SurfaceDivisor d);

}  // namespace hbn
