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

#include "hbn/differential.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dense_pencil.hpp"
#include "hbn/determinant.hpp"
#include "hbn/dual.hpp"

namespace hbn {

namespace {

using DualXY = Dual<XYForm>;

bool strictly_upper(Pattern p) { return p == Pattern::kStrictUpper || p == Pattern::kSpecialPoint; }

int entry_degree(const MatrixPair& pair, bool in_b, int i, int j) {
  return in_b ? pair.grid.b(i, j) : pair.grid.a(i, j);
}

bool selected(Selector s, int k, bool in_b, int i, int j) {
  if (s == Selector::kFull) return true;
  if (!in_b && i + j == k - 1) return false;
  if (in_b && i + j == k - 2) return false;
  if (s == Selector::kTPrime) return true;
  if (!in_b && i == k - 1 && j == k - 1) return false;
  const bool corner = j == 0 || i == k - 1;
  switch (s) {
    case Selector::kTDoublePrime:
      return true;
    case Selector::kTCorner:
      return corner && !(!in_b && i == k - 1 && j == 0);
    case Selector::kTInductive:
      return !corner;
    default:
      return false;
  }
}

XYForm zero_derivative(const MatrixPair& pair, int offset) {
  std::vector<BinaryForm> c;
  for (int p = 0; p <= pair.k(); ++p) c.push_back(BinaryForm::zero(pair.field, pair.grid.coefficient_degree(p) - offset));
  return XYForm(std::move(c));
}

std::vector<int> block_offsets(const DegreeGrid& grid, const std::vector<int>& x_powers, int& rows) {
  std::vector<int> offsets;
  rows = 0;
  for (int p : x_powers) {
    offsets.push_back(rows);
    rows += std::max(0, grid.coefficient_degree(p) + 1);
  }
  return offsets;
}

// Derivatives of det(Ax + By) in the entries: x C(i, j) for A and y C(i, j)
// for B, with C the cofactor matrix of the pencil (dense, y = s = 1).
class EntryDerivatives {
 public:
  explicit EntryDerivatives(const MatrixPair& pair) : k_(pair.k()), cofactors_(detail::dense_cofactors(pair)) {}

  /// Cofactor carrying the x^p coefficient of the derivative and its x-power,
  /// or nullptr when that coefficient vanishes.
  const detail::DenseXT* coefficient(const TangentCoordinate& c, int p, std::size_t& x_power) const {
    const auto& cof = cofactors_[static_cast<std::size_t>(c.i)][static_cast<std::size_t>(c.j)];
    const int q = c.in_b ? p : p - 1;
    if (q < 0 || q > k_ - 1 || cof.empty()) return nullptr;
    x_power = static_cast<std::size_t>(q);
    return &cof;
  }

 private:
  int k_;
  std::vector<std::vector<detail::DenseXT>> cofactors_;
};

}  // namespace

std::string to_string(Selector s) {
  switch (s) {
    case Selector::kFull:
      return "FULL";
    case Selector::kTPrime:
      return "T_PRIME";
    case Selector::kTDoublePrime:
      return "T_DOUBLE_PRIME";
    case Selector::kTCorner:
      return "T_CORNER";
    case Selector::kTInductive:
      return "T_INDUCTIVE";
  }
  return "?";
}

Selector parse_selector(const std::string& name) {
  std::string n;
  for (char c : name) n += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (n == "FULL" || n == "FULL'") return Selector::kFull;
  if (n == "T_PRIME") return Selector::kTPrime;
  if (n == "T_DOUBLE_PRIME") return Selector::kTDoublePrime;
  if (n == "T_CORNER") return Selector::kTCorner;
  if (n == "T_INDUCTIVE") return Selector::kTInductive;
  throw std::invalid_argument("unknown selector '" + name + "'");
}

std::vector<TangentCoordinate> tangent_basis(const MatrixPair& pair, Selector selector) {
  if (selector != Selector::kFull && !strictly_upper(pair.pattern)) {
    throw std::invalid_argument("selector " + to_string(selector) + " needs a strictly upper pair");
  }
  const int k = pair.k();
  // Special points deform inside the whole strictly upper family.
  const Pattern pattern = pair.pattern == Pattern::kSpecialPoint ? Pattern::kStrictUpper : pair.pattern;
  std::vector<TangentCoordinate> basis;
  for (bool in_b : {false, true}) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const bool allowed = in_b ? allows_b(pattern, k, i, j) : allows_a(pattern, k, i, j);
        if (!allowed || !selected(selector, k, in_b, i, j)) continue;
        for (int l = 0; l <= entry_degree(pair, in_b, i, j); ++l) basis.push_back({in_b, i, j, l});
      }
    }
  }
  return basis;
}

std::vector<int> all_x_powers(int k) {
  std::vector<int> v;
  for (int p = 0; p <= k; ++p) v.push_back(p);
  return v;
}

XYForm entry_derivative(const MatrixPair& pair, bool in_b, int i, int j) {
  const int k = pair.k();
  const auto& F = pair.field;
  const auto base = pencil(pair);
  SquareMatrix<DualXY> m(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) m[static_cast<std::size_t>(r)].emplace_back(base[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  // Unit perturbation: x (for A) or y (for B) times the constant form 1. The
  // absent partner keeps the pencil grading deg [y] = deg [x] + m.
  const int m_index = pair.grid.m();
  const auto one_form = BinaryForm::constant(F, 1);
  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eps =
      in_b ? XYForm({one_form, BinaryForm::zero(F, -m_index)}) : XYForm({BinaryForm::zero(F, m_index), one_form});
  const auto det = laplace_determinant(m, DualXY(XYForm::constant(one_form)));
  if (det.eps) return *det.eps;
  return zero_derivative(pair, entry_degree(pair, in_b, i, j));
}

DifferentialMatrix dphi_matrix(const MatrixPair& pair, Selector selector, const std::vector<int>& x_powers) {
  auto basis = tangent_basis(pair, selector);
  int rows = 0;
  auto offsets = block_offsets(pair.grid, x_powers, rows);
  FpMatrix mat(pair.field, static_cast<std::size_t>(rows), basis.size());
  const EntryDerivatives derivatives(pair);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& c = basis[col];
    // The derivative times s^{d-l} t^l: coefficient q lands on t-power q + l.
    for (std::size_t b = 0; b < x_powers.size(); ++b) {
      std::size_t xp = 0;
      const auto* cof = derivatives.coefficient(c, x_powers[b], xp);
      if (!cof) continue;
      const int block_end = offsets[b] + pair.grid.coefficient_degree(x_powers[b]);
      for (std::size_t q = 0; q < cof->width; ++q) {
        const auto v = cof->at(xp, q);
        if (v == 0) continue;
        const int row = offsets[b] + static_cast<int>(q) + c.t_power;
        if (row > block_end) throw InternalInconsistency("derivative exceeds the coefficient degree");
        mat(static_cast<std::size_t>(row), col) = static_cast<PrimeField::Elem>(v);
      }
    }
  }
  return {std::move(mat), std::move(basis), x_powers, std::move(offsets)};
}

DifferentialMatrix dphi_matrix(const MatrixPair& pair, Selector selector) {
  return dphi_matrix(pair, selector, all_x_powers(pair.k()));
}

DominanceReport dominance_rank_for_grid(const PrimeField& field, const DegreeGrid& grid, int trials, Rng& rng) {
  DominanceReport report;
  report.target_dim = grid.target_dim();
  report.source_dim = grid.source_dim();
  for (int t = 1; t <= trials; ++t) {
    const auto pair = sample_pair(field, grid, Pattern::kFull, rng);
    const int rank = static_cast<int>(matrix_rank(dphi_matrix(pair, Selector::kFull).matrix));
    report.trials = t;
    report.max_rank = std::max(report.max_rank, rank);
    if (rank == report.target_dim) {
      report.first_success = t;
      break;
    }
  }
  return report;
}

DominanceReport dominance_rank(const SplittingType& e, const SplittingType& f, const HirzebruchClass& cls,
                               int trials, Rng& rng, const PrimeField& field) {
  if (e.size() != cls.k || f.size() != cls.k) throw std::invalid_argument("types must have length k");
  if (!check_conditions(e, f, cls).degree) {
    throw std::invalid_argument("total degrees of e and f must differ by delta");
  }
  return dominance_rank_for_grid(field, DegreeGrid(e, f, cls.m), trials, rng);
}

nlohmann::json to_json(const DominanceReport& r) {
  nlohmann::json j{{"target_dim", r.target_dim},
                   {"source_dim", r.source_dim},
                   {"max_rank", r.max_rank},
                   {"trials", r.trials},
                   {"verdict", r.verdict()}};
  if (r.first_success) j["first_success"] = *r.first_success;
  return j;
}

int product_differential_rank(const std::vector<BinaryForm>& factors) {
  if (factors.empty()) return 0;
  const auto& F = factors.front().field();
  const std::size_t n = factors.size();
  // prefix[l] = Q_0 ... Q_{l-1}, suffix[l] = Q_l ... Q_{n-1}.
  std::vector<BinaryForm> prefix{BinaryForm::constant(F, 1)};
  for (const auto& q : factors) prefix.push_back(prefix.back() * q);
  std::vector<BinaryForm> suffix(n + 1, BinaryForm::constant(F, 1));
  for (std::size_t l = n; l-- > 0;) suffix[l] = factors[l] * suffix[l + 1];
  const int target = prefix.back().degree() + 1;
  std::size_t cols = 0;
  for (const auto& q : factors) cols += static_cast<std::size_t>(q.degree() + 1);
  FpMatrix mat(F, static_cast<std::size_t>(target), cols);
  std::size_t col = 0;
  for (std::size_t l = 0; l < n; ++l) {
    const auto others = prefix[l] * suffix[l + 1];
    for (int power = 0; power <= factors[l].degree(); ++power, ++col) {
      for (int q = 0; q <= others.degree(); ++q) mat(static_cast<std::size_t>(q + power), col) = others.coeff(q);
    }
  }
  return static_cast<int>(matrix_rank(mat));
}

ProductRuleReport product_rule_rank(const std::vector<int>& degrees, Rng& rng, const PrimeField& field) {
  ProductRuleReport r;
  int total = 0;
  std::vector<BinaryForm> factors;
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("product rule needs nonnegative degrees");
    total += d;
    factors.push_back(BinaryForm::random(field, d, rng));
  }
  r.target_dim = total + 1;
  r.random_rank = product_differential_rank(factors);
  r.random_point = r.random_rank == r.target_dim;
  if (degrees.size() == 2) {
    const std::vector<BinaryForm> witness{BinaryForm::monomial(field, degrees[0], degrees[0], 1),
                                          BinaryForm::monomial(field, degrees[1], 0, 1)};
    r.witness_point = product_differential_rank(witness) == r.target_dim;
  }
  return r;
}

LemmaRank lemma_sq_check(const MatrixPair& pair) {
  if (!strictly_upper(pair.pattern)) throw std::invalid_argument("lemma check needs a strictly upper pair");
  const int k = pair.k();
  if (k < 2) throw std::invalid_argument("lemma check needs k >= 2");
  const auto dm = dphi_matrix(pair, Selector::kFull, {1, k});
  return {static_cast<int>(matrix_rank(dm.matrix)),
          pair.grid.coefficient_degree(1) + 1 + pair.grid.coefficient_degree(k) + 1};
}

LemmaMainReport lemma_main_check(const MatrixPair& pair) {
  if (!strictly_upper(pair.pattern)) throw std::invalid_argument("lemma check needs a strictly upper pair");
  const int k = pair.k();
  if (k < 2) throw std::invalid_argument("lemma check needs k >= 2");
  std::vector<int> powers;
  for (int p = 1; p <= k; ++p) powers.push_back(p);
  const auto dm = dphi_matrix(pair, Selector::kTPrime, powers);

  auto product = BinaryForm::constant(pair.field, 1);
  for (int r = 0; r + 1 < k; ++r) product = product * pair.b[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 2 - r)];
  const int quotient_degree = pair.grid.coefficient_degree(1) - product.degree();
  if (quotient_degree < 0) throw std::invalid_argument("super anti-diagonal degrees exceed deg P_1");

  // Generators of the subspace: product * t^q in the P_1 block, all of P_2..P_{k-1}.
  int middle = 0;
  for (int p = 2; p < k; ++p) middle += pair.grid.coefficient_degree(p) + 1;
  const int subspace_dim = quotient_degree + 1 + middle;
  FpMatrix w(pair.field, dm.matrix.rows(), static_cast<std::size_t>(subspace_dim));
  std::size_t col = 0;
  for (int q = 0; q <= quotient_degree; ++q, ++col) {
    for (int c = 0; c <= product.degree(); ++c) w(static_cast<std::size_t>(dm.offsets[0] + q + c), col) = product.coeff(c);
  }
  for (int p = 2; p < k; ++p) {
    const int off = dm.offsets[static_cast<std::size_t>(p - 1)];
    for (int q = 0; q <= pair.grid.coefficient_degree(p); ++q, ++col) w(static_cast<std::size_t>(off + q), col) = 1;
  }

  LemmaMainReport r;
  r.image_rank = static_cast<int>(matrix_rank(dm.matrix));
  r.subspace_dim = subspace_dim;
  const auto w_rank = matrix_rank(w);
  r.contained = w_rank == static_cast<std::size_t>(subspace_dim) && matrix_rank(w.hconcat(dm.matrix)) == w_rank;
  return r;
}

LemmaEvaluationReport evaluation_map_rank(const SpecialPoint& point) {
  const auto& pair = point.pair;
  const auto& F = pair.field;
  const int k = pair.k();
  const auto basis = tangent_basis(pair, Selector::kTCorner);

  std::vector<PrimeField::Elem> f_roots;
  for (const auto& r : point.b_roots) f_roots.insert(f_roots.end(), r.begin(), r.end());
  // Rows: (x-power, root).
  std::vector<std::pair<int, PrimeField::Elem>> rows;
  for (auto r : f_roots) rows.emplace_back(2, r);
  for (int p = 2; p <= k - 1; ++p) {
    for (auto r : point.g_roots) rows.emplace_back(p, r);
  }

  FpMatrix mat(F, rows.size(), basis.size());
  const EntryDerivatives derivatives(pair);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& c = basis[col];
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const auto [power, root] = rows[row];
      std::size_t xp = 0;
      const auto* cof = derivatives.coefficient(c, power, xp);
      if (!cof) continue;
      PrimeField::Elem value = 0;
      for (std::size_t q = cof->width; q-- > 0;) {
        value = F.add(F.mul(value, root), static_cast<PrimeField::Elem>(cof->at(xp, q)));
      }
      mat(row, col) = F.mul(value, F.pow(root, static_cast<std::uint64_t>(c.t_power)));
    }
  }
  LemmaEvaluationReport r;
  r.rank = static_cast<int>(matrix_rank(mat));
  r.target = static_cast<int>(rows.size());
  r.attempts = 1;
  return r;
}

LemmaEvaluationReport lemma_is_check(const SplittingType& e, const SplittingType& f, int m, Rng& rng,
                                     const PrimeField& field, int attempts) {
  const DegreeGrid grid(e, f, m);
  LemmaEvaluationReport best;
  for (int a = 1; a <= attempts; ++a) {
    auto r = evaluation_map_rank(sample_special_point(field, grid, rng));
    r.attempts = a;
    if (a == 1 || r.rank > best.rank) best = r;
    best.attempts = a;
    if (best.holds()) break;
  }
  return best;
}

MatrixPair scale_bottom_row(const MatrixPair& pair, PrimeField::Elem h) {
  MatrixPair out = pair;
  const int k = pair.k();
  auto& row = out.a[static_cast<std::size_t>(k - 1)];
  for (int j = 1; j < k; ++j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)].scaled(h);
  return out;
}

}  // namespace hbn
