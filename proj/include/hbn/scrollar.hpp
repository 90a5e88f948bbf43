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
#include <vector>

#include "hbn/splitting.hpp"
#include "json.hpp"

namespace hbn {

/// a_1 <= ... <= a_{k-1}: the dual of the pushforward of O_C without its
/// trivial summand. Stored zero-based.
class ScrollarInvariants {
 public:
  /// Throws std::invalid_argument unless weakly increasing and nonnegative.
  explicit ScrollarInvariants(std::vector<int> a);

  /// Covering degree k, one more than the number of invariants.
  int degree() const { return static_cast<int>(a_.size()) + 1; }
  /// One-based, 1 <= i <= k - 1.
  int at(int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& entries() const { return a_; }
  /// a_{i+j} <= a_i + a_j whenever i + j <= k - 1.
  bool subadditive() const;
  std::string to_string() const;

  auto operator<=>(const ScrollarInvariants&) const = default;

 private:
  std::vector<int> a_;
};

/// Read off from the structure sheaf type: a_i = -(entry k - i, one-based).
/// Throws std::invalid_argument if the largest entry is not 0.
ScrollarInvariants scrollar_from_structure_type(const SplittingType& structure);
/// For a curve in the class: a_i = im + delta. Throws InternalInconsistency
/// if this disagrees with the structure sheaf type.
ScrollarInvariants scrollar_invariants(const HirzebruchClass& cls);

struct TripleConstraintReport {
  SplittingType d, e, f;
  /// One-based (i, j) with 1 <= i + j - k <= k and f_{i+j-k} < d_i + e_j.
  std::vector<std::pair<int, int>> violations;
  /// sum (d_i + e_i - f_i) = -(g + k - 1).
  bool degree_ok = false;
};

/// Multiplicative bound for line bundles L1 (type d), L2 (type e) and
/// L3 = L1 + L2 (type f) on a cover of genus g.
TripleConstraintReport general_bound_check(const SplittingType& d, const SplittingType& e, const SplittingType& f,
                                           int genus);

/// Every subadditive tuple with 1 <= a_1 and a_{k-1} <= bound.
std::vector<ScrollarInvariants> oo_polytope(int k, int bound);

/// e_{i+j} <= a_i + e_j for one-based 1 <= i, j with i + j <= k.
bool in_ol_polytope(const ScrollarInvariants& a, const SplittingType& e);

/// Every e with e_1 = 0 and e_k <= e_bound in the polytope, lexicographic.
/// Throws std::invalid_argument if a is not subadditive.
std::vector<SplittingType> ol_polytope(const ScrollarInvariants& a, int e_bound);

struct AbundanceReport {
  HirzebruchClass cls;
  ScrollarInvariants a;
  int e_bound = 0;
  /// Sizes of the conjectured and the realizable sets in the window.
  int conjectured = 0;
  int realizable = 0;
  bool abundant = false;
  /// Conjectured but not realizable, lexicographic.
  std::vector<SplittingType> difference;
  /// A member of the difference. For m * delta != 0 and k >= 4 this is
  /// (0, m+d, m+d, 2m+d+1, ..., 2m+d+1) with d = delta.
  std::optional<SplittingType> witness;
};

/// Default window bound a_{k-1} + 2.
int default_e_bound(const HirzebruchClass& cls);

/// Compares the conjectured set with the types realizable on a general curve
/// in the class, over e_1 = 0 and e_k <= e_bound. Throws
/// InternalInconsistency if some realizable type is not conjectured.
AbundanceReport abundance_verdict(const HirzebruchClass& cls, int e_bound);

struct GeneralCoverWitness {
  int k = 0;
  int genus = 0;
  /// The balanced scrollar invariants of a general cover.
  ScrollarInvariants a;
  /// Conjectured type with u(e) > g, so absent on a general cover.
  SplittingType e;
  int u = 0;
  /// Whether e is (0, ..., 0, d, d) with g = (k - 1)(d - 1) + l,
  /// 0 <= l <= k - 2. Otherwise it came from searching the polytope.
  bool constructed = false;
};

/// Empty unless k > 3 and g >= 2(k - 1). Tries (0, ..., 0, d, d) first, then
/// the lexicographically first conjectured type with u(e) > g; empty if
/// there is none.
std::optional<GeneralCoverWitness> general_cover_not_abundant(int k, int genus);

nlohmann::json to_json(const TripleConstraintReport& r);
nlohmann::json to_json(const AbundanceReport& r);
nlohmann::json to_json(const GeneralCoverWitness& w);

}  // namespace hbn
