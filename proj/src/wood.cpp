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

#include "hbn/wood.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "dense_pencil.hpp"
#include "hbn/determinant.hpp"

namespace hbn {

namespace {

BinaryForm random_or_zero(const PrimeField& field, int degree, bool allowed, Rng& rng) {
  return allowed ? BinaryForm::random(field, degree, rng) : BinaryForm::zero(field, degree);
}

int permutation_sign_of_reversal(int n) { return (n * (n - 1) / 2) % 2 ? -1 : 1; }

BinaryForm signed_form(const BinaryForm& f, int sign) { return sign < 0 ? -f : f; }

std::vector<PrimeField::Elem> distinct_elements(const PrimeField& field, std::size_t count, Rng& rng) {
  if (count + 1 > field.characteristic()) {
    throw std::invalid_argument("need " + std::to_string(count) +
                                " distinct roots; use a larger prime");
  }
  std::set<PrimeField::Elem> seen;
  std::vector<PrimeField::Elem> out;
  while (out.size() < count) {
    const auto v = field.random(rng);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace

DegreeGrid::DegreeGrid(const SplittingType& e, const SplittingType& f, int m)
    : k_(e.size()), m_(m), delta_(f.total() - e.total()), e_(e.entries()), f_(f.entries()) {
  if (e.size() != f.size()) throw std::invalid_argument("degree grid needs types of equal length");
  if (m < 0) throw std::invalid_argument("surface index m must be nonnegative");
}

int DegreeGrid::source_dim() const {
  int total = 0;
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) total += std::max(0, a(i, j) + 1) + std::max(0, b(i, j) + 1);
  }
  return total;
}

int DegreeGrid::target_dim() const {
  int total = 0;
  for (int i = 0; i <= k_; ++i) total += std::max(0, coefficient_degree(i) + 1);
  return total;
}

DegreeGrid degree_grid(const SplittingType& e, const SplittingType& f, int m) { return DegreeGrid(e, f, m); }

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::kFull:
      return "FULL";
    case Pattern::kLowerUpper:
      return "LU";
    case Pattern::kStrictUpper:
      return "SUT";
    case Pattern::kSpecialPoint:
      return "IS-POINT";
  }
  return "?";
}

Pattern parse_pattern(const std::string& name) {
  std::string n;
  for (char c : name) n += c == '_' ? '-' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (n == "FULL") return Pattern::kFull;
  if (n == "LU") return Pattern::kLowerUpper;
  if (n == "SUT") return Pattern::kStrictUpper;
  if (n == "IS-POINT" || n == "IS") return Pattern::kSpecialPoint;
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

bool allows_a(Pattern p, int k, int i, int j) {
  return p == Pattern::kFull || i + j >= k - 1;
}

bool allows_b(Pattern p, int k, int i, int j) {
  switch (p) {
    case Pattern::kFull:
      return true;
    case Pattern::kLowerUpper:
      return i + j <= k - 1;
    case Pattern::kStrictUpper:
    case Pattern::kSpecialPoint:
      return i + j <= k - 2;
  }
  return false;
}

MatrixPair zero_pair(const PrimeField& field, const DegreeGrid& grid, Pattern pattern) {
  const int k = grid.k();
  MatrixPair pair{field, grid, pattern, {}, {}};
  pair.a.resize(static_cast<std::size_t>(k));
  pair.b.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      pair.a[static_cast<std::size_t>(i)].push_back(BinaryForm::zero(field, grid.a(i, j)));
      pair.b[static_cast<std::size_t>(i)].push_back(BinaryForm::zero(field, grid.b(i, j)));
    }
  }
  return pair;
}

MatrixPair sample_pair(const PrimeField& field, const DegreeGrid& grid, Pattern pattern, Rng& rng) {
  if (pattern == Pattern::kSpecialPoint) return sample_special_point(field, grid, rng).pair;
  const int k = grid.k();
  MatrixPair pair{field, grid, pattern, {}, {}};
  pair.a.resize(static_cast<std::size_t>(k));
  pair.b.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      pair.a[static_cast<std::size_t>(i)].push_back(
          random_or_zero(field, grid.a(i, j), allows_a(pattern, k, i, j), rng));
      pair.b[static_cast<std::size_t>(i)].push_back(
          random_or_zero(field, grid.b(i, j), allows_b(pattern, k, i, j), rng));
    }
  }
  return pair;
}

SpecialPoint sample_special_point(const PrimeField& field, const DegreeGrid& grid, Rng& rng) {
  const int k = grid.k();
  if (k < 3) throw std::invalid_argument("the special point needs k >= 3");
  for (int i = 0; i < k; ++i) {
    if (grid.a(i, k - 1 - i) < 0 || (i + 1 < k && grid.b(i, k - 2 - i) < 0)) {
      throw std::invalid_argument("the special point needs nonnegative (super) anti-diagonal degrees");
    }
  }
  SpecialPoint sp{zero_pair(field, grid, Pattern::kSpecialPoint), {}, {}, k - 1};
  auto& a = sp.pair.a;
  auto& b = sp.pair.b;
  auto at = [](FormMatrix& m, int i, int j) -> BinaryForm& {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  for (int r = 0; r <= k - 2; ++r) {
    if (grid.b(r, 0) >= 0) {
      sp.first_b_row = r;
      break;
    }
  }

  // Fixed entries: B(k-2-c, c) for c = 1..k-2 and A(k-1, 0).
  std::size_t root_count = static_cast<std::size_t>(grid.a(k - 1, 0));
  for (int c = 1; c <= k - 2; ++c) root_count += static_cast<std::size_t>(grid.b(k - 2 - c, c));
  const auto pool = distinct_elements(field, root_count, rng);
  auto next = pool.begin();
  sp.b_roots.assign(static_cast<std::size_t>(k - 1), {});
  for (int c = 1; c <= k - 2; ++c) {
    auto& roots = sp.b_roots[static_cast<std::size_t>(c)];
    roots.assign(next, next + grid.b(k - 2 - c, c));
    next += grid.b(k - 2 - c, c);
    at(b, k - 2 - c, c) = BinaryForm::from_roots(field, roots).scaled(field.random_nonzero(rng));
  }
  sp.g_roots.assign(next, pool.end());
  at(a, k - 1, 0) = BinaryForm::from_roots(field, sp.g_roots).scaled(field.random_nonzero(rng));

  // General entries of the shape.
  for (int r = 0; r <= k - 3; ++r) {
    at(a, r, k - 1 - r) = BinaryForm::random(field, grid.a(r, k - 1 - r), rng);
    if (r < sp.first_b_row) {
      at(a, r, k - 1) = BinaryForm::random(field, grid.a(r, k - 1), rng);
    } else {
      at(b, r, 0) = BinaryForm::random(field, grid.b(r, 0), rng);
    }
  }
  at(b, k - 2, 0) = BinaryForm::random(field, grid.b(k - 2, 0), rng);
  at(a, k - 2, k - 1) = BinaryForm::random(field, grid.a(k - 2, k - 1), rng);
  for (int j = 1; j < k; ++j) at(a, k - 1, j) = BinaryForm::random(field, grid.a(k - 1, j), rng);
  return sp;
}

void BinaryFormCurve::validate() const {
  if (static_cast<int>(p.size()) != cls.k + 1) throw std::invalid_argument("curve needs k + 1 coefficients");
  for (int i = 0; i <= cls.k; ++i) {
    if (p[static_cast<std::size_t>(i)].degree() != cls.delta + (cls.k - i) * cls.m) {
      throw std::invalid_argument("coefficient of x^" + std::to_string(i) + " has the wrong degree");
    }
  }
  if (is_zero()) throw std::invalid_argument("the zero form defines no curve");
}

bool BinaryFormCurve::is_zero() const {
  return std::all_of(p.begin(), p.end(), [](const BinaryForm& f) { return f.is_zero(); });
}

std::vector<std::vector<XYForm>> pencil(const MatrixPair& pair) {
  std::vector<std::vector<XYForm>> m;
  for (std::size_t i = 0; i < pair.a.size(); ++i) {
    m.emplace_back();
    for (std::size_t j = 0; j < pair.a.size(); ++j) m.back().push_back(XYForm::linear(pair.a[i][j], pair.b[i][j]));
  }
  return m;
}

XYForm pencil_determinant(const std::vector<std::vector<XYForm>>& m) {
  const PrimeField field = m.front().front().coeff(0).field();
  return laplace_determinant(m, XYForm::constant(BinaryForm::constant(field, 1)));
}

BinaryFormCurve phi(const MatrixPair& pair) {
  const auto& grid = pair.grid;
  const auto det = detail::block_determinant(pair, detail::index_range(0, grid.k()), detail::index_range(0, grid.k()));
  BinaryFormCurve curve{{grid.m(), grid.k(), grid.delta()}, pair.field, det.coefficients()};
  for (int i = 0; i <= grid.k(); ++i) {
    if (curve.p[static_cast<std::size_t>(i)].degree() != grid.coefficient_degree(i)) {
      throw InternalInconsistency("determinant coefficient of x^" + std::to_string(i) +
                                  " does not match the grid");
    }
  }
  return curve;
}

std::string ForcedReducibility::verdict() const {
  if (divisible_by_y) return "DIVISIBLE_BY_Y";
  if (block) return "BLOCK_FACTOR";
  return "NONE";
}

ForcedReducibility forced_reducibility(const DegreeGrid& grid) {
  ForcedReducibility out;
  const int k = grid.k();
  for (int i = 0; i < k; ++i) {
    if (grid.a(i, k - 1 - i) < 0) out.divisible_by_y = true;
  }
  for (int i = 1; i < k; ++i) {
    if (grid.b(i - 1, k - 1 - i) < 0) {
      out.block = i;
      break;
    }
  }
  return out;
}

bool verify_forced_factor(const MatrixPair& pair, const BinaryFormCurve& curve,
                          const ForcedReducibility& forced) {
  const int k = pair.k();
  if (forced.divisible_by_y && !curve.p[static_cast<std::size_t>(k)].is_zero()) return false;
  if (forced.block) {
    const int i = *forced.block;
    auto product = detail::block_determinant(pair, detail::index_range(0, i), detail::index_range(k - i, k)) *
                   detail::block_determinant(pair, detail::index_range(i, k), detail::index_range(0, k - i));
    if ((i * (k - i)) % 2) product = -product;
    if (!(product == XYForm(curve.p))) return false;
  }
  return !forced.none();
}

std::pair<BinaryForm, BinaryForm> p1_pk_closed_form(const MatrixPair& pair) {
  if (pair.pattern != Pattern::kStrictUpper && pair.pattern != Pattern::kSpecialPoint) {
    throw std::invalid_argument("closed forms for P_1 and P_k need a strictly upper pair");
  }
  const int k = pair.k();
  auto p1 = pair.a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
  for (int r = 0; r + 1 < k; ++r) p1 = p1 * pair.b[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 2 - r)];
  auto pk = BinaryForm::constant(pair.field, 1);
  for (int r = 0; r < k; ++r) pk = pk * pair.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 1 - r)];
  return {signed_form(p1, permutation_sign_of_reversal(k - 1)), signed_form(pk, permutation_sign_of_reversal(k))};
}

namespace {

nlohmann::json forms_json(const FormMatrix& m) {
  auto out = nlohmann::json::array();
  for (const auto& row : m) {
    auto r = nlohmann::json::array();
    for (const auto& f : row) r.push_back(f.coefficients());
    out.push_back(r);
  }
  return out;
}

FormMatrix forms_from_json(const PrimeField& field, const nlohmann::json& j, const DegreeGrid& grid, bool is_b) {
  const int k = grid.k();
  if (!j.is_array() || static_cast<int>(j.size()) != k) throw std::invalid_argument("matrix must have k rows");
  FormMatrix m(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != k) throw std::invalid_argument("matrix must have k columns");
    for (int c = 0; c < k; ++c) {
      const int degree = is_b ? grid.b(i, c) : grid.a(i, c);
      m[static_cast<std::size_t>(i)].emplace_back(field, degree,
                                                  row[static_cast<std::size_t>(c)].get<std::vector<PrimeField::Elem>>());
    }
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const MatrixPair& pair) {
  return {{"p", pair.field.characteristic()},
          {"m", pair.grid.m()},
          {"k", pair.k()},
          {"delta", pair.grid.delta()},
          {"e", pair.grid.e()},
          {"f", pair.grid.f()},
          {"pattern", to_string(pair.pattern)},
          {"A", forms_json(pair.a)},
          {"B", forms_json(pair.b)}};
}

nlohmann::json to_json(const BinaryFormCurve& curve) {
  auto p = nlohmann::json::array();
  for (const auto& f : curve.p) p.push_back(f.coefficients());
  return {{"p", curve.field.characteristic()},
          {"m", curve.cls.m},
          {"k", curve.cls.k},
          {"delta", curve.cls.delta},
          {"P", p}};
}

MatrixPair pair_from_json(const nlohmann::json& j) {
  const PrimeField field(j.at("p").get<std::uint32_t>());
  const DegreeGrid grid(SplittingType(j.at("e").get<std::vector<int>>()),
                        SplittingType(j.at("f").get<std::vector<int>>()), j.at("m").get<int>());
  if (grid.delta() != j.at("delta").get<int>() || grid.k() != j.at("k").get<int>()) {
    throw std::invalid_argument("pair header disagrees with its splitting types");
  }
  const Pattern pattern = j.contains("pattern") ? parse_pattern(j["pattern"].get<std::string>()) : Pattern::kFull;
  return MatrixPair{field, grid, pattern, forms_from_json(field, j.at("A"), grid, false),
                    forms_from_json(field, j.at("B"), grid, true)};
}

BinaryFormCurve curve_from_json(const nlohmann::json& j) {
  const PrimeField field(j.at("p").get<std::uint32_t>());
  BinaryFormCurve curve{{j.at("m").get<int>(), j.at("k").get<int>(), j.at("delta").get<int>()}, field, {}};
  const auto& p = j.at("P");
  if (!p.is_array() || static_cast<int>(p.size()) != curve.cls.k + 1) {
    throw std::invalid_argument("curve needs k + 1 coefficient lists");
  }
  for (int i = 0; i <= curve.cls.k; ++i) {
    curve.p.emplace_back(field, curve.cls.delta + (curve.cls.k - i) * curve.cls.m,
                         p[static_cast<std::size_t>(i)].get<std::vector<PrimeField::Elem>>());
  }
  curve.validate();
  return curve;
}

}  // namespace hbn
