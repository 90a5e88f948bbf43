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

// Certification of curves P = sum P_i(s, t) x^i y^{k-i} on F_m.
//
// Cox coordinates (s, t, x, y) carry the scaling
// (s, t, x, y) ~ (ls, lt, l^m u x, u y). The four torus charts set one of
// s, t and one of x, y to 1; each chart polynomial is written in a base
// coordinate u (the surviving one of s, t) and a fiber coordinate v (the
// surviving one of x, y):
//   kSY: s = y = 1, (u, v) = (t, x), f = sum P_i(1, u) v^i
//   kSX: s = x = 1, (u, v) = (t, y), f = sum P_i(1, u) v^{k-i}
//   kTY: t = y = 1, (u, v) = (s, x), f = sum P_i(u, 1) v^i
//   kTX: t = x = 1, (u, v) = (s, y), f = sum P_i(u, 1) v^{k-i}

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hbn/poly.hpp"
#include "hbn/wood.hpp"
#include "json.hpp"

namespace hbn {

enum class Chart { kSY, kSX, kTY, kTX };
inline constexpr std::array<Chart, 4> kAllCharts{Chart::kSY, Chart::kSX, Chart::kTY, Chart::kTX};
std::string to_string(Chart c);

/// Chart polynomial as coefficients in F_p[u], indexed by the power of v.
using ChartPolynomial = std::vector<Poly<PrimeField>>;
ChartPolynomial chart_polynomial(const BinaryFormCurve& curve, Chart chart);

/// Values of f, df/du and df/dv at (u, v) over F_{p^2}.
std::array<Fp2Elem, 3> chart_jet(const QuadraticExtension& ext, const ChartPolynomial& f, Fp2Elem u, Fp2Elem v);

enum class SmoothVerdict { kSmooth, kSingular, kUnknown };
/// kResultant: every chart closed by a gcd of resultants. kBruteForce: some
/// chart needed enumeration of candidate points over F_p and F_{p^2}.
enum class CertificateMethod { kResultant, kBruteForce };
std::string to_string(SmoothVerdict v);
std::string to_string(CertificateMethod m);

struct ChartPoint {
  Chart chart;
  Fp2Elem u;
  Fp2Elem v;
};

struct SmoothnessCertificate {
  SmoothVerdict verdict = SmoothVerdict::kUnknown;
  CertificateMethod method = CertificateMethod::kResultant;
  /// Present exactly when the verdict is kSingular.
  std::optional<ChartPoint> witness;
};

/// Jacobian criterion chart by chart. Throws std::invalid_argument on a zero
/// curve.
SmoothnessCertificate smoothness(const BinaryFormCurve& curve, Rng& rng);
nlohmann::json to_json(const SmoothnessCertificate& cert, const PrimeField& field);

struct DiscriminantCheck {
  /// Branch points on the line counted with multiplicity: degree of the
  /// discriminant in the chart s = 1 plus its order at s = 0.
  int degree = 0;
  int expected = 0;
  /// False when the discriminant vanishes identically or p divides k.
  bool separable = false;
  bool ok() const { return separable && degree == expected; }
};

/// Discriminant of P as a form of degree k in (x, y), via Res(P_x, P_y).
DiscriminantCheck discriminant_check(const BinaryFormCurve& curve);

/// Point of F_m in Cox coordinates over F_{p^2}.
struct SurfacePoint {
  Fp2Elem s, t, x, y;
};

SurfacePoint to_surface_point(const QuadraticExtension& ext, const ChartPoint& p);

/// Rank of Ax + By at a point.
std::size_t pencil_rank(const MatrixPair& pair, const SurfacePoint& point);

/// True when Ax + By has rank exactly k - 1 at every given point. Throws
/// std::invalid_argument if a point is off the curve det = 0.
bool cokernel_rank_check(const MatrixPair& pair, const BinaryFormCurve& curve, const std::vector<SurfacePoint>& points);

/// Up to n points of the curve in the chart s = y = 1, over F_p first and
/// then F_{p^2}.
std::vector<SurfacePoint> sample_curve_points(const BinaryFormCurve& curve, int n, Rng& rng);

/// Samples points and checks them; empty when no point was found.
std::optional<bool> cokernel_rank_check(const MatrixPair& pair, const BinaryFormCurve& curve, int n_points, Rng& rng);

}  // namespace hbn
