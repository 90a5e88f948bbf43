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

#include "hbn/curve.hpp"

#include <stdexcept>

#include "hbn/determinant.hpp"
#include "hbn/linalg.hpp"
#include "hbn/resultant.hpp"

namespace hbn {

namespace {

using FpPoly = Poly<PrimeField>;
using ExtPoly = Poly<QuadraticExtension>;

constexpr int kResultantAttempts = 3;
constexpr int kRandomFibers = 32;

bool is_zero(const ChartPolynomial& f) {
  for (const auto& c : f) {
    if (!c.is_zero()) return false;
  }
  return true;
}

int v_degree(const ChartPolynomial& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!f[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

ChartPolynomial derivative_v(const ChartPolynomial& f) {
  const auto& F = f.front().field();
  ChartPolynomial out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i].scaled(F.from_int(static_cast<std::int64_t>(i))));
  if (out.empty()) out.emplace_back(F);
  return out;
}

ChartPolynomial derivative_u(const ChartPolynomial& f) {
  ChartPolynomial out;
  for (const auto& c : f) out.push_back(c.derivative());
  return out;
}

ChartPolynomial add_scaled(ChartPolynomial g, PrimeField::Elem c, const ChartPolynomial& h) {
  if (h.size() > g.size()) g.resize(h.size(), FpPoly(h.front().field()));
  for (std::size_t i = 0; i < h.size(); ++i) g[i] += h[i].scaled(c);
  return g;
}

FpPoly resultant_v(const ChartPolynomial& f, const ChartPolynomial& g) {
  const auto& F = f.front().field();
  return sylvester_resultant(f, g, FpPoly(F), FpPoly::constant(F, F.one()));
}

Fp2Elem eval_ext(const QuadraticExtension& ext, const FpPoly& c, Fp2Elem u) {
  auto acc = ext.zero();
  const auto& cs = c.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = ext.add(ext.mul(acc, u), ext.embed(*it));
  return acc;
}

ExtPoly restrict_to_fiber(const QuadraticExtension& ext, const ChartPolynomial& f, Fp2Elem u) {
  std::vector<Fp2Elem> v;
  for (const auto& c : f) v.push_back(eval_ext(ext, c, u));
  return ExtPoly(ext, std::move(v));
}

Fp2Elem eval_form(const QuadraticExtension& ext, const BinaryForm& form, Fp2Elem s, Fp2Elem t) {
  if (form.is_zero()) return ext.zero();
  const int d = form.degree();
  auto acc = ext.zero();
  for (int q = 0; q <= d; ++q) {
    const auto term = ext.mul(ext.pow(s, static_cast<std::uint64_t>(d - q)), ext.pow(t, static_cast<std::uint64_t>(q)));
    acc = ext.add(acc, ext.mul(ext.embed(form.coeff(q)), term));
  }
  return acc;
}

Fp2Elem eval_curve(const QuadraticExtension& ext, const BinaryFormCurve& curve, const SurfacePoint& pt) {
  const int k = curve.cls.k;
  auto acc = ext.zero();
  for (int i = 0; i <= k; ++i) {
    const auto mono = ext.mul(ext.pow(pt.x, static_cast<std::uint64_t>(i)), ext.pow(pt.y, static_cast<std::uint64_t>(k - i)));
    acc = ext.add(acc, ext.mul(eval_form(ext, curve.p[static_cast<std::size_t>(i)], pt.s, pt.t), mono));
  }
  return acc;
}

enum class FiberVerdict { kClean, kSingular, kUnlocated };

struct FiberResult {
  FiberVerdict verdict = FiberVerdict::kClean;
  Fp2Elem v{};
};

// Common zeros of f, f_u, f_v on the fiber u = u0 of the chart.
FiberResult check_fiber(const QuadraticExtension& ext, const ChartPolynomial& f, const ChartPolynomial& fu, Fp2Elem u0,
                        Rng& rng) {
  const auto a = restrict_to_fiber(ext, f, u0);
  const auto g = gcd(gcd(a, a.derivative()), restrict_to_fiber(ext, fu, u0));
  if (g.is_zero()) return {FiberVerdict::kSingular, ext.zero()};
  if (g.degree() == 0) return {};
  const auto r = roots(g, rng);
  if (r.empty()) return {FiberVerdict::kUnlocated, {}};
  return {FiberVerdict::kSingular, r.front()};
}

struct ChartOutcome {
  SmoothVerdict verdict = SmoothVerdict::kUnknown;
  bool enumerated = false;
  std::optional<ChartPoint> witness;
};

ChartOutcome singular_at(Chart chart, Fp2Elem u, Fp2Elem v, bool enumerated) {
  return {SmoothVerdict::kSingular, enumerated, ChartPoint{chart, u, v}};
}

// Walks the candidate fibers; smooth only if the candidates are exhaustive.
ChartOutcome enumerate_fibers(const QuadraticExtension& ext, const ChartPolynomial& f, const ChartPolynomial& fu,
                              Chart chart, const std::vector<Fp2Elem>& candidates, bool exhaustive, Rng& rng) {
  bool unlocated = false;
  for (auto u0 : candidates) {
    const auto r = check_fiber(ext, f, fu, u0, rng);
    if (r.verdict == FiberVerdict::kSingular) return singular_at(chart, u0, r.v, true);
    if (r.verdict == FiberVerdict::kUnlocated) unlocated = true;
  }
  if (exhaustive && !unlocated) return {SmoothVerdict::kSmooth, true, std::nullopt};
  return {SmoothVerdict::kUnknown, true, std::nullopt};
}

// Roots in F_{p^2} of h, and whether they exhaust the roots over the closure.
std::pair<std::vector<Fp2Elem>, bool> candidate_roots(const QuadraticExtension& ext, const FpPoly& h, Rng& rng) {
  const auto lifted = lift(ext, h);
  auto r = roots(lifted, rng);
  const auto common = gcd(h, h.derivative());
  const int squarefree_degree = common.is_zero() ? h.degree() : h.degree() - common.degree();
  return {std::move(r), static_cast<int>(r.size()) == squarefree_degree};
}

ChartOutcome certify_chart(const QuadraticExtension& ext, ChartPolynomial f, Chart chart, Rng& rng) {
  const auto& F = ext.base();
  while (f.size() > 1 && f.back().is_zero()) f.pop_back();
  const auto fu = derivative_u(f);

  if (v_degree(f) == 0) {
    // A union of fibers, singular exactly over repeated roots.
    const auto& c0 = f.front();
    const auto h = gcd(c0, c0.derivative());
    if (h.degree() == 0) return {SmoothVerdict::kSmooth, false, std::nullopt};
    const auto r = candidate_roots(ext, h, rng).first;
    if (!r.empty()) return singular_at(chart, r.front(), ext.zero(), true);
    return {SmoothVerdict::kUnknown, true, std::nullopt};
  }

  const auto fv = derivative_v(f);
  const auto r1 = resultant_v(f, fv);
  std::optional<FpPoly> h;
  if (!r1.is_zero()) {
    // A common root of r1 and Res(f, f_u + c f_v) away from the singular
    // locus depends on c, so the gcd over a few random c shrinks to it.
    for (int attempt = 0; attempt < kResultantAttempts; ++attempt) {
      const auto r2 = resultant_v(f, add_scaled(fu, F.random(rng), fv));
      if (r2.is_zero()) continue;
      const auto g = gcd(r1, r2);
      h = h ? gcd(*h, g) : g;
      if (h->degree() == 0) return {SmoothVerdict::kSmooth, false, std::nullopt};
    }
  }
  if (h) {
    auto [r, exhaustive] = candidate_roots(ext, *h, rng);
    return enumerate_fibers(ext, f, fu, chart, r, exhaustive, rng);
  }
  // Resultants vanish identically: f has a repeated factor. Probe random fibers.
  std::vector<Fp2Elem> probes;
  for (int i = 0; i < kRandomFibers; ++i) probes.push_back(ext.embed(F.random(rng)));
  for (int i = 0; i < kRandomFibers; ++i) probes.push_back(ext.random(rng));
  return enumerate_fibers(ext, f, fu, chart, probes, false, rng);
}

nlohmann::json elem_json(Fp2Elem a) { return nlohmann::json::array({a.re, a.im}); }

}  // namespace

std::string to_string(Chart c) {
  switch (c) {
    case Chart::kSY: return "s=1,y=1";
    case Chart::kSX: return "s=1,x=1";
    case Chart::kTY: return "t=1,y=1";
    case Chart::kTX: return "t=1,x=1";
  }
  return "?";
}

std::string to_string(SmoothVerdict v) {
  switch (v) {
    case SmoothVerdict::kSmooth: return "SMOOTH";
    case SmoothVerdict::kSingular: return "SINGULAR";
    case SmoothVerdict::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(CertificateMethod m) {
  return m == CertificateMethod::kResultant ? "RESULTANT" : "BRUTE_FORCE";
}

ChartPolynomial chart_polynomial(const BinaryFormCurve& curve, Chart chart) {
  const int k = curve.cls.k;
  ChartPolynomial f(static_cast<std::size_t>(k) + 1, FpPoly(curve.field));
  const bool s_chart = chart == Chart::kSY || chart == Chart::kSX;
  const bool y_chart = chart == Chart::kSY || chart == Chart::kTY;
  for (int i = 0; i <= k; ++i) {
    const auto& form = curve.p[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(y_chart ? i : k - i)] = s_chart ? form.at_s_one() : form.at_t_one();
  }
  return f;
}

std::array<Fp2Elem, 3> chart_jet(const QuadraticExtension& ext, const ChartPolynomial& f, Fp2Elem u, Fp2Elem v) {
  auto value = ext.zero();
  auto du = ext.zero();
  auto dv = ext.zero();
  auto v_power = ext.one();
  auto v_power_prev = ext.zero();  // v^{i-1}
  for (std::size_t i = 0; i < f.size(); ++i) {
    value = ext.add(value, ext.mul(eval_ext(ext, f[i], u), v_power));
    du = ext.add(du, ext.mul(eval_ext(ext, f[i].derivative(), u), v_power));
    if (i > 0) {
      const auto scaled = ext.mul(ext.embed(ext.base().from_int(static_cast<std::int64_t>(i))), v_power_prev);
      dv = ext.add(dv, ext.mul(eval_ext(ext, f[i], u), scaled));
    }
    v_power_prev = v_power;
    v_power = ext.mul(v_power, v);
  }
  return {value, du, dv};
}

SmoothnessCertificate smoothness(const BinaryFormCurve& curve, Rng& rng) {
  curve.validate();
  const QuadraticExtension ext(curve.field);
  SmoothnessCertificate cert;
  bool unknown = false;
  bool enumerated = false;
  for (auto chart : kAllCharts) {
    const auto f = chart_polynomial(curve, chart);
    if (is_zero(f)) throw std::invalid_argument("smoothness of a zero curve");
    const auto outcome = certify_chart(ext, f, chart, rng);
    enumerated = enumerated || outcome.enumerated;
    if (outcome.verdict == SmoothVerdict::kSingular) {
      cert.verdict = SmoothVerdict::kSingular;
      cert.method = outcome.enumerated ? CertificateMethod::kBruteForce : CertificateMethod::kResultant;
      cert.witness = outcome.witness;
      return cert;
    }
    if (outcome.verdict == SmoothVerdict::kUnknown) unknown = true;
  }
  cert.verdict = unknown ? SmoothVerdict::kUnknown : SmoothVerdict::kSmooth;
  cert.method = enumerated ? CertificateMethod::kBruteForce : CertificateMethod::kResultant;
  return cert;
}

nlohmann::json to_json(const SmoothnessCertificate& cert, const PrimeField& field) {
  nlohmann::json j{{"verdict", to_string(cert.verdict)}, {"method", to_string(cert.method)}, {"p", field.characteristic()}};
  if (cert.witness) {
    j["witness"] = {{"chart", to_string(cert.witness->chart)},
                    {"u", elem_json(cert.witness->u)},
                    {"v", elem_json(cert.witness->v)}};
  }
  return j;
}

DiscriminantCheck discriminant_check(const BinaryFormCurve& curve) {
  curve.validate();
  const auto& F = curve.field;
  const int k = curve.cls.k;
  DiscriminantCheck out;
  out.expected = 2 * (k - 1) * curve.cls.delta + k * (k - 1) * curve.cls.m;
  const auto n = static_cast<std::size_t>(k - 1);

  // Res(P_x, P_y) as forms of formal degree k - 1 in (x, y), in one chart.
  auto discriminant = [&](bool s_chart) {
    std::vector<FpPoly> px, py;  // by x-power
    for (int j = 0; j < k; ++j) {
      const auto& above = curve.p[static_cast<std::size_t>(j + 1)];
      const auto& here = curve.p[static_cast<std::size_t>(j)];
      px.push_back((s_chart ? above.at_s_one() : above.at_t_one()).scaled(F.from_int(j + 1)));
      py.push_back((s_chart ? here.at_s_one() : here.at_t_one()).scaled(F.from_int(k - j)));
    }
    const FpPoly zero(F);
    SquareMatrix<FpPoly> syl(2 * n, std::vector<FpPoly>(2 * n, zero));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i <= n; ++i) {
        syl[r][r + i] = px[n - i];
        syl[n + r][r + i] = py[n - i];
      }
    }
    return laplace_determinant(syl, FpPoly::constant(F, F.one()));
  };

  const auto in_s = discriminant(true);
  const auto in_t = discriminant(false);
  out.separable = !in_s.is_zero() && F.from_int(k) != 0;
  if (in_s.is_zero() || in_t.is_zero()) return out;
  int order_at_infinity = 0;
  while (in_t.coeff(order_at_infinity) == 0) ++order_at_infinity;
  out.degree = in_s.degree() + order_at_infinity;
  return out;
}

SurfacePoint to_surface_point(const QuadraticExtension& ext, const ChartPoint& p) {
  const auto one = ext.one();
  switch (p.chart) {
    case Chart::kSY: return {one, p.u, p.v, one};
    case Chart::kSX: return {one, p.u, one, p.v};
    case Chart::kTY: return {p.u, one, p.v, one};
    case Chart::kTX: return {p.u, one, one, p.v};
  }
  throw std::invalid_argument("unknown chart");
}

std::size_t pencil_rank(const MatrixPair& pair, const SurfacePoint& point) {
  const QuadraticExtension ext(pair.field);
  const auto k = static_cast<std::size_t>(pair.k());
  Matrix<QuadraticExtension> m(ext, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = ext.add(ext.mul(eval_form(ext, pair.a[i][j], point.s, point.t), point.x),
                        ext.mul(eval_form(ext, pair.b[i][j], point.s, point.t), point.y));
    }
  }
  return matrix_rank<QuadraticExtension>(std::move(m));
}

bool cokernel_rank_check(const MatrixPair& pair, const BinaryFormCurve& curve, const std::vector<SurfacePoint>& points) {
  const QuadraticExtension ext(pair.field);
  const auto expected = static_cast<std::size_t>(pair.k() - 1);
  bool ok = true;
  for (const auto& pt : points) {
    if (!ext.is_zero(eval_curve(ext, curve, pt))) throw std::invalid_argument("point is not on the curve");
    if (pencil_rank(pair, pt) != expected) ok = false;
  }
  return ok;
}

std::vector<SurfacePoint> sample_curve_points(const BinaryFormCurve& curve, int n, Rng& rng) {
  curve.validate();
  const QuadraticExtension ext(curve.field);
  const auto& F = curve.field;
  std::vector<SurfacePoint> out;
  const int base_attempts = 2 * n + 8;
  for (int attempt = 0; attempt < 2 * base_attempts && static_cast<int>(out.size()) < n; ++attempt) {
    const Fp2Elem t = attempt < base_attempts ? ext.embed(F.random(rng)) : ext.random(rng);
    std::vector<Fp2Elem> coeffs;
    for (const auto& form : curve.p) coeffs.push_back(form.evaluate_affine(ext, t));
    const ExtPoly fiber(ext, std::move(coeffs));
    if (fiber.is_zero()) {
      out.push_back({ext.one(), t, ext.random(rng), ext.one()});
      continue;
    }
    const auto r = roots(fiber, rng);
    if (!r.empty()) out.push_back({ext.one(), t, r.front(), ext.one()});
  }
  return out;
}

std::optional<bool> cokernel_rank_check(const MatrixPair& pair, const BinaryFormCurve& curve, int n_points, Rng& rng) {
  const auto points = sample_curve_points(curve, n_points, rng);
  if (points.empty()) return std::nullopt;
  return cokernel_rank_check(pair, curve, points);
}

}  // namespace hbn
