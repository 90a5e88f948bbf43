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

#include "hbn/binary_form.hpp"
#include "hbn/field.hpp"
#include "hbn/splitting.hpp"
#include "json.hpp"

namespace hbn {

/// Degrees of the entries of A and B. Indices are zero-based:
/// a(i, j) = f_i - e_{k-1-j}, b = a + m. Both grow along rows and columns.
class DegreeGrid {
 public:
  DegreeGrid(const SplittingType& e, const SplittingType& f, int m);

  int k() const { return k_; }
  int m() const { return m_; }
  int delta() const { return delta_; }
  int a(int i, int j) const { return f_[static_cast<std::size_t>(i)] - e_[static_cast<std::size_t>(k_ - 1 - j)]; }
  int b(int i, int j) const { return a(i, j) + m_; }
  const std::vector<int>& e() const { return e_; }
  const std::vector<int>& f() const { return f_; }

  /// Number of free coefficients: sum (a+1)_+ + (b+1)_+.
  int source_dim() const;
  /// Coefficient count of the image: sum over x-powers of (delta + (k-i) m + 1).
  int target_dim() const;
  /// Degree of the x^i coefficient of the determinant.
  int coefficient_degree(int x_power) const { return delta_ + (k_ - x_power) * m_; }

 private:
  int k_;
  int m_;
  int delta_;
  std::vector<int> e_;
  std::vector<int> f_;
};

DegreeGrid degree_grid(const SplittingType& e, const SplittingType& f, int m);

enum class Pattern { kFull, kLowerUpper, kStrictUpper, kSpecialPoint };

std::string to_string(Pattern p);
/// Accepts FULL, LU, SUT, IS-POINT (case-insensitive, '_' or '-').
Pattern parse_pattern(const std::string& name);

/// Whether the pattern allows a nonzero A (resp. B) entry at (i, j).
/// Triangularity is with respect to the anti-diagonal. The special point
/// lives inside the strictly upper pattern.
bool allows_a(Pattern p, int k, int i, int j);
bool allows_b(Pattern p, int k, int i, int j);

using FormMatrix = std::vector<std::vector<BinaryForm>>;

struct MatrixPair {
  PrimeField field;
  DegreeGrid grid;
  Pattern pattern;
  FormMatrix a;
  FormMatrix b;

  int k() const { return grid.k(); }
};

/// Zero pair with entries of the grid's declared degrees.
MatrixPair zero_pair(const PrimeField& field, const DegreeGrid& grid, Pattern pattern);

/// Uniform entries of the mandated degrees with pattern zeros enforced.
/// kSpecialPoint delegates to sample_special_point.
MatrixPair sample_pair(const PrimeField& field, const DegreeGrid& grid, Pattern pattern, Rng& rng);

/// The special point used for the evaluation lemma. Fixed entries
/// B(k-2-c, c) (c = 1..k-2, zero-based) and A_{k-1, 0} are products of
/// distinct linear forms with pairwise distinct roots; the remaining entries of
/// the shape are uniform. Requires k >= 3.
struct SpecialPoint {
  MatrixPair pair;
  /// Roots (chart s = 1) of each fixed B entry, indexed by its column c = 1..k-2.
  std::vector<std::vector<PrimeField::Elem>> b_roots;
  std::vector<PrimeField::Elem> g_roots;
  /// Smallest zero-based row r0 with b(r0, 0) >= 0; at most k-2. Rows above
  /// r0 carry A(r, k-1) instead of B(r, 0).
  int first_b_row;
};
SpecialPoint sample_special_point(const PrimeField& field, const DegreeGrid& grid, Rng& rng);

/// det(Ax + By) = sum P_i x^i y^{k-i}, with deg P_i = delta + (k-i) m.
struct BinaryFormCurve {
  HirzebruchClass cls;
  PrimeField field;
  std::vector<BinaryForm> p;  // indexed by x-power

  /// Throws std::invalid_argument on wrong count/degrees or an all-zero P.
  void validate() const;
  bool is_zero() const;
};

/// Exact determinant expansion; throws InternalInconsistency if a coefficient
/// has the wrong degree.
BinaryFormCurve phi(const MatrixPair& pair);

/// Entry-wise matrix Ax + By as xy-forms.
std::vector<std::vector<XYForm>> pencil(const MatrixPair& pair);
XYForm pencil_determinant(const std::vector<std::vector<XYForm>>& m);

struct ForcedReducibility {
  /// Some anti-diagonal a(i, k-1-i) < 0: det A vanishes, so y | P.
  bool divisible_by_y = false;
  /// Smallest i (1-based block size) with b(i-1, k-1-i) < 0: the first i rows
  /// are supported on the last i columns and P factors.
  std::optional<int> block;

  bool none() const { return !divisible_by_y && !block; }
  /// DIVISIBLE_BY_Y, BLOCK_FACTOR or NONE, in that priority.
  std::string verdict() const;
};

ForcedReducibility forced_reducibility(const DegreeGrid& grid);

/// Checks the factorization forced by the grid on an actual pair: P_k = 0 for
/// divisibility by y; P = sign * det(top-right block) * det(bottom-left block)
/// for a block. Returns false when the grid forces nothing.
bool verify_forced_factor(const MatrixPair& pair, const BinaryFormCurve& curve,
                          const ForcedReducibility& forced);

/// (P_1, P_k) of a strictly upper pair from the products of the super
/// anti-diagonal with A_{k,k} and of the anti-diagonal, with permutation signs.
std::pair<BinaryForm, BinaryForm> p1_pk_closed_form(const MatrixPair& pair);

/// Interchange format {p, m, k, delta, A, B} with coefficient lists in
/// increasing t-power; e, f and pattern are stored alongside so the grid can
/// be rebuilt.
nlohmann::json to_json(const MatrixPair& pair);
/// {p, m, k, delta, P}.
nlohmann::json to_json(const BinaryFormCurve& curve);
/// Throws std::invalid_argument on shape or degree mismatch.
MatrixPair pair_from_json(const nlohmann::json& j);
BinaryFormCurve curve_from_json(const nlohmann::json& j);

}  // namespace hbn
