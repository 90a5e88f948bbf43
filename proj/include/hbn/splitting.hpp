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

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace hbn {

/// Degrees e_1 <= ... <= e_k of a split bundle on the projective line.
class SplittingType {
 public:
  /// Throws std::invalid_argument unless nonempty and weakly increasing.
  explicit SplittingType(std::vector<int> entries);
  /// Sorts first.
  static SplittingType canonical(std::vector<int> entries);

  int size() const { return static_cast<int>(e_.size()); }
  /// Zero-based.
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }
  int total() const;
  SplittingType shifted(int c) const;
  std::string to_string() const;

  auto operator<=>(const SplittingType&) const = default;

 private:
  std::vector<int> e_;
};

/// Curve class kH + delta F on the Hirzebruch surface F_m.
struct HirzebruchClass {
  int m = 0;
  int k = 1;
  int delta = 0;

  /// Throws std::invalid_argument on negative m, delta or nonpositive k.
  void validate() const;
  auto operator<=>(const HirzebruchClass&) const = default;
};

/// Thrown when an operation needs a nonempty stratum.
class EmptyStratum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a closed formula fails its own consistency check.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

int genus(const HirzebruchClass& cls);

/// Expected codimension: sum over ordered pairs of max(0, e_i - e_j - 1).
int expected_codimension(const SplittingType& e);

/// h^1 of Hom(O(e), O(f)) twisted by O + O(m).
int nu(const SplittingType& e, const SplittingType& f, int m);

/// Partial-sum order on types of equal length and total degree.
bool dominates(const SplittingType& lower, const SplittingType& upper);

SplittingType structure_sheaf_type(const HirzebruchClass& cls);

struct DirectrixTwistType {
  SplittingType type;
  int expected_total;
};

/// Type of the pushforward of O(directrix restricted to C); k >= 2. Throws
/// InternalInconsistency if its total misses delta - g - k + 1.
DirectrixTwistType odelta_type(const HirzebruchClass& cls);

struct StratumConditions {
  bool lower = false;    // f_i >= e_i
  bool shifted = false;  // f_i >= e_{i+1} - m
  bool degree = false;   // sum (f_i - e_i) = delta
  bool all() const { return lower && shifted && degree; }
};

StratumConditions check_conditions(const SplittingType& e, const SplittingType& f,
                                   const HirzebruchClass& cls);

/// Empty optional means the stratum is empty.
using Dimension = std::optional<int>;

Dimension predicted_dim(const SplittingType& e, const SplittingType& f, const HirzebruchClass& cls);
Dimension plane_curve_dim(const SplittingType& e, int g);

bool corollary_check(const SplittingType& e, const HirzebruchClass& cls);
/// Throws EmptyStratum when corollary_check fails.
SplittingType witness_f(const SplittingType& e, const HirzebruchClass& cls);

int rho_classical(int g, int r, int d);
int rho_prime(int g, const SplittingType& e);

/// h^0 of O(e), i.e. sum max(0, e_i + 1).
int section_count(const SplittingType& e);

/// Dimension counts whose alternating sum gives the stratum dimension.
struct DimensionBookkeeping {
  int source_closed_form;  // 2k^2 + 2k delta + k^2 m + nu
  int group;               // 2k^2 + u(e) + u(f) - 1
  int target_plus_genus;   // 2k delta + k^2 m + 1
};
DimensionBookkeeping dimension_bookkeeping(const SplittingType& e, const SplittingType& f,
                                           const HirzebruchClass& cls);

struct StratumReport {
  SplittingType e;
  SplittingType f;
  StratumConditions conditions;
  int u_e = 0;
  int u_f = 0;
  int nu = 0;
  Dimension dim;
  /// Present for plane-curve classes (m = 1, delta = 0).
  std::optional<Dimension> plane_dim;
};

StratumReport make_report(const SplittingType& e, const SplittingType& f, const HirzebruchClass& cls);
nlohmann::json to_json(const StratumReport& r);
nlohmann::json dimension_json(const Dimension& d);

struct EnumerationOptions {
  /// Inclusive bounds on the entries of e; defaults from default_window().
  std::optional<std::pair<int, int>> window;
  /// Restrict to a single e.
  std::optional<SplittingType> e;
  /// Degree of the line bundle on C, which fixes sum e = d - g - k + 1.
  std::optional<int> degree;
  /// Exact h^0 of the line bundle.
  std::optional<int> sections;
};

std::pair<int, int> default_window(const HirzebruchClass& cls);
/// Window used when a degree filter is given: covers every type of that total
/// whose consecutive gaps satisfy the realizability bound.
std::pair<int, int> window_for_total(const HirzebruchClass& cls, int total);

/// Every stratum with conditions all true, in lexicographic order of (e, f).
std::vector<StratumReport> enumerate_strata(const HirzebruchClass& cls, const EnumerationOptions& opts);

/// Calls fn on each weakly increasing k-tuple with entries in [lo, hi], in
/// lexicographic order.
void for_each_splitting_type(int k, int lo, int hi, const std::function<void(const SplittingType&)>& fn);

/// Calls fn on each f satisfying all three conditions against e, in
/// lexicographic order.
void for_each_partner(const SplittingType& e, const HirzebruchClass& cls,
                      const std::function<void(const SplittingType&)>& fn);

}  // namespace hbn
