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
#include <string>
#include <vector>

#include "hbn/linalg.hpp"
#include "hbn/wood.hpp"
#include "json.hpp"

namespace hbn {

/// Tangent subspaces at a pair. Everything finer than kFull assumes the
/// strictly upper pattern. Indices below are zero-based.
///   kFull:        every free coefficient of the pair's pattern
///   kTPrime:      drop A(i, k-1-i) and B(i, k-2-i)
///   kTDoublePrime: additionally drop A(k-1, k-1)
///   kTCorner:     only the first column and last row, without A(k-1, 0)
///   kTInductive:  T'' with the first column and last row removed
enum class Selector { kFull, kTPrime, kTDoublePrime, kTCorner, kTInductive };

std::string to_string(Selector s);
/// Accepts FULL, T_PRIME, T_DOUBLE_PRIME, T_CORNER, T_INDUCTIVE.
Selector parse_selector(const std::string& name);

/// One free coefficient: the t^t_power coefficient of A(i, j) or B(i, j).
struct TangentCoordinate {
  bool in_b;
  int i;
  int j;
  int t_power;
};

/// Throws std::invalid_argument for a sub-selector on a non-strictly-upper pair.
std::vector<TangentCoordinate> tangent_basis(const MatrixPair& pair, Selector selector);

/// Columns: tangent coordinates. Rows: coefficients of the requested x-powers
/// of det(Ax + By), stacked in the given order, t-powers ascending.
struct DifferentialMatrix {
  FpMatrix matrix;
  std::vector<TangentCoordinate> basis;
  std::vector<int> x_powers;
  /// Row offset of each requested x-power block.
  std::vector<int> offsets;
};

std::vector<int> all_x_powers(int k);

/// Each column is the epsilon part of det((A + eps A')x + (B + eps B')y) for
/// the unit tangent vector of that coordinate.
DifferentialMatrix dphi_matrix(const MatrixPair& pair, Selector selector, const std::vector<int>& x_powers);
DifferentialMatrix dphi_matrix(const MatrixPair& pair, Selector selector);

/// The xy-form multiplying a unit perturbation of one entry, i.e. the
/// epsilon part of a dual-number determinant with eps at (i, j) of A or B.
XYForm entry_derivative(const MatrixPair& pair, bool in_b, int i, int j);

struct DominanceReport {
  int target_dim = 0;
  int source_dim = 0;
  int max_rank = 0;
  int trials = 0;
  /// 1-based trial that first reached full rank.
  std::optional<int> first_success;
  bool dominant() const { return first_success.has_value(); }
  std::string verdict() const { return dominant() ? "DOMINANT" : "NOT_ACHIEVED"; }
};

/// Samples FULL pairs on the grid and ranks the full differential, stopping
/// at the first full-rank trial. Rank can only drop on special points, so a
/// DOMINANT verdict certifies; NOT_ACHIEVED is evidence only.
DominanceReport dominance_rank_for_grid(const PrimeField& field, const DegreeGrid& grid, int trials, Rng& rng);
/// Throws std::invalid_argument unless the types have length k and the degree
/// condition holds.
DominanceReport dominance_rank(const SplittingType& e, const SplittingType& f, const HirzebruchClass& cls,
                               int trials, Rng& rng, const PrimeField& field = PrimeField());
nlohmann::json to_json(const DominanceReport& r);

struct ProductRuleReport {
  int target_dim = 0;
  int random_rank = 0;
  bool random_point = false;
  /// Only for two factors: the point (t^{d_1}, s^{d_2}).
  std::optional<bool> witness_point;
};

/// Differential of (Q_1, ..., Q_n) -> Q_1 ... Q_n with deg Q_l = degrees[l].
ProductRuleReport product_rule_rank(const std::vector<int>& degrees, Rng& rng,
                                    const PrimeField& field = PrimeField());
/// Rank of the product differential at the given factors.
int product_differential_rank(const std::vector<BinaryForm>& factors);

/// Rank of ([x^1] + [x^k]) o dphi on the full strictly upper tangent space
/// against dim P_1 + dim P_k.
struct LemmaRank {
  int rank = 0;
  int target = 0;
  bool holds() const { return rank == target; }
};
LemmaRank lemma_sq_check(const MatrixPair& pair);

/// Image of T' under ([x^1] + ... + [x^k]) o dphi against the subspace where
/// the super anti-diagonal product divides P_1 and P_k = 0.
struct LemmaMainReport {
  int image_rank = 0;
  int subspace_dim = 0;
  bool contained = false;
  bool holds() const { return contained && image_rank == subspace_dim; }
};
LemmaMainReport lemma_main_check(const MatrixPair& pair);

/// Evaluation-composed map on T-corner at special points: values of [x^2] at
/// the roots of the fixed B entries and of [x^i] (i = 2..k-1) at the roots of
/// the fixed A entry. Retries up to `attempts` special points.
struct LemmaEvaluationReport {
  int rank = 0;
  int target = 0;
  int attempts = 0;
  bool holds() const { return rank == target; }
};
LemmaEvaluationReport lemma_is_check(const SplittingType& e, const SplittingType& f, int m, Rng& rng,
                                     const PrimeField& field = PrimeField(), int attempts = 5);
/// The same map at a given special point.
LemmaEvaluationReport evaluation_map_rank(const SpecialPoint& point);

/// Copy of the pair with A(k-1, 1..k-1) scaled by h.
MatrixPair scale_bottom_row(const MatrixPair& pair, PrimeField::Elem h);

}  // namespace hbn
