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

#include "hbn/splitting.hpp"

#include <algorithm>
#include <numeric>

namespace hbn {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

SplittingType::SplittingType(std::vector<int> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw std::invalid_argument("splitting type needs at least one entry");
  if (!std::is_sorted(e_.begin(), e_.end())) {
    throw std::invalid_argument("splitting type " + to_string() + " is not weakly increasing");
  }
}

SplittingType SplittingType::canonical(std::vector<int> entries) {
  std::sort(entries.begin(), entries.end());
  return SplittingType(std::move(entries));
}

int SplittingType::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

SplittingType SplittingType::shifted(int c) const {
  auto v = e_;
  for (auto& x : v) x += c;
  return SplittingType(std::move(v));
}

std::string SplittingType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

void HirzebruchClass::validate() const {
  if (m < 0) throw std::invalid_argument("surface index m must be nonnegative");
  if (k < 1) throw std::invalid_argument("fiber degree k must be positive");
  if (delta < 0) throw std::invalid_argument("directrix degree delta must be nonnegative");
}

int genus(const HirzebruchClass& cls) {
  return cls.k * (cls.k - 1) / 2 * cls.m + (cls.k - 1) * (cls.delta - 1);
}

int expected_codimension(const SplittingType& e) {
  int u = 0;
  for (int a : e.entries()) {
    for (int b : e.entries()) u += std::max(0, a - b - 1);
  }
  return u;
}

int nu(const SplittingType& e, const SplittingType& f, int m) {
  if (e.size() != f.size()) throw std::invalid_argument("nu needs types of equal length");
  auto h1 = [](int d) { return std::max(0, -d - 1); };
  int total = 0;
  for (int ei : e.entries()) {
    for (int fj : f.entries()) total += h1(fj - ei) + h1(fj - ei + m);
  }
  return total;
}

bool dominates(const SplittingType& lower, const SplittingType& upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("dominance needs equal lengths");
  int lo = 0;
  int hi = 0;
  for (int i = 0; i < lower.size(); ++i) {
    lo += lower[i];
    hi += upper[i];
    if (lo > hi) return false;
  }
  return lo == hi;
}

SplittingType structure_sheaf_type(const HirzebruchClass& cls) {
  if (cls.k < 1) throw std::invalid_argument("structure sheaf type needs k >= 1");
  std::vector<int> v;
  for (int j = cls.k - 1; j >= 1; --j) v.push_back(-j * cls.m - cls.delta);
  v.push_back(0);
  return SplittingType(std::move(v));
}

DirectrixTwistType odelta_type(const HirzebruchClass& cls) {
  if (cls.k < 2) throw std::invalid_argument("directrix twist type needs k >= 2");
  std::vector<int> v;
  for (int j = cls.k - 1; j >= 2; --j) v.push_back(-j * cls.m - cls.delta);
  v.push_back(-cls.m);
  v.push_back(0);
  DirectrixTwistType out{SplittingType::canonical(std::move(v)), cls.delta - genus(cls) - cls.k + 1};
  if (out.type.total() != out.expected_total) {
    throw InternalInconsistency("directrix twist type " + out.type.to_string() + " has total " +
                                std::to_string(out.type.total()) + ", expected " +
                                std::to_string(out.expected_total));
  }
  return out;
}

StratumConditions check_conditions(const SplittingType& e, const SplittingType& f,
                                   const HirzebruchClass& cls) {
  if (e.size() != f.size()) throw std::invalid_argument("conditions need types of equal length");
  StratumConditions c{true, true, false};
  const int k = e.size();
  for (int i = 0; i < k; ++i) {
    if (f[i] < e[i]) c.lower = false;
    if (i + 1 < k && f[i] < e[i + 1] - cls.m) c.shifted = false;
  }
  c.degree = f.total() - e.total() == cls.delta;
  return c;
}

Dimension predicted_dim(const SplittingType& e, const SplittingType& f, const HirzebruchClass& cls) {
  if (e.size() != f.size() || !check_conditions(e, f, cls).all()) return std::nullopt;
  return genus(cls) - expected_codimension(e) - expected_codimension(f) + nu(e, f, cls.m);
}

Dimension plane_curve_dim(const SplittingType& e, int g) {
  for (int i = 0; i + 1 < e.size(); ++i) {
    if (e[i + 1] - e[i] >= 2) return std::nullopt;
  }
  int far_pairs = 0;
  for (int a : e.entries()) {
    for (int b : e.entries()) far_pairs += a - b >= 2;
  }
  return g - far_pairs;
}

bool corollary_check(const SplittingType& e, const HirzebruchClass& cls) {
  int excess = 0;
  for (int i = 0; i + 1 < e.size(); ++i) excess += std::max(0, e[i + 1] - e[i] - cls.m);
  return excess <= cls.delta;
}

SplittingType witness_f(const SplittingType& e, const HirzebruchClass& cls) {
  if (!corollary_check(e, cls)) {
    throw EmptyStratum("no partner type exists for " + e.to_string() + " in this class");
  }
  const int k = e.size();
  std::vector<int> f(static_cast<std::size_t>(k));
  int used = 0;
  for (int i = 0; i + 1 < k; ++i) {
    const int bump = std::max(0, e[i + 1] - e[i] - cls.m);
    f[static_cast<std::size_t>(i)] = e[i] + bump;
    used += bump;
  }
  f.back() = e[k - 1] + cls.delta - used;
  auto out = SplittingType::canonical(std::move(f));
  if (!check_conditions(e, out, cls).all()) {
    throw InternalInconsistency("partner type " + out.to_string() + " fails the conditions");
  }
  return out;
}

int rho_classical(int g, int r, int d) { return g - (r + 1) * (g - d + r); }

int rho_prime(int g, const SplittingType& e) { return g - expected_codimension(e); }

int section_count(const SplittingType& e) {
  int h = 0;
  for (int x : e.entries()) h += std::max(0, x + 1);
  return h;
}

DimensionBookkeeping dimension_bookkeeping(const SplittingType& e, const SplittingType& f,
                                           const HirzebruchClass& cls) {
  const int k = e.size();
  return {2 * k * k + 2 * k * cls.delta + k * k * cls.m + nu(e, f, cls.m),
          2 * k * k + expected_codimension(e) + expected_codimension(f) - 1,
          2 * k * cls.delta + k * k * cls.m + 1};
}

StratumReport make_report(const SplittingType& e, const SplittingType& f, const HirzebruchClass& cls) {
  StratumReport r{e, f, check_conditions(e, f, cls), expected_codimension(e), expected_codimension(f),
                  nu(e, f, cls.m), predicted_dim(e, f, cls), std::nullopt};
  if (cls.m == 1 && cls.delta == 0) r.plane_dim = plane_curve_dim(e, genus(cls));
  return r;
}

nlohmann::json dimension_json(const Dimension& d) {
  return d ? nlohmann::json(*d) : nlohmann::json("empty");
}

nlohmann::json to_json(const StratumReport& r) {
  nlohmann::json j{{"e", r.e.entries()},
                   {"f", r.f.entries()},
                   {"cond", {r.conditions.lower, r.conditions.shifted, r.conditions.degree}},
                   {"u_e", r.u_e},
                   {"u_f", r.u_f},
                   {"nu", r.nu},
                   {"dim", dimension_json(r.dim)}};
  if (r.plane_dim) j["plane_dim"] = dimension_json(*r.plane_dim);
  return j;
}

std::pair<int, int> default_window(const HirzebruchClass& cls) {
  return {-(cls.k - 1) * cls.m - 2 * cls.delta, cls.delta};
}

std::pair<int, int> window_for_total(const HirzebruchClass& cls, int total) {
  // A realizable type has e_k - e_1 <= (k-1)m + delta, and its mean lies in [e_1, e_k].
  const int spread = (cls.k - 1) * cls.m + cls.delta;
  return {floor_div(total, cls.k) - spread, ceil_div(total, cls.k) + spread};
}

void for_each_splitting_type(int k, int lo, int hi, const std::function<void(const SplittingType&)>& fn) {
  if (k < 1 || lo > hi) return;
  std::vector<int> cur(static_cast<std::size_t>(k), lo);
  for (;;) {
    fn(SplittingType(cur));
    // Next weakly increasing tuple: bump the last entry below hi, reset the tail.
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) --i;
    if (i < 0) return;
    const int v = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < k; ++j) cur[static_cast<std::size_t>(j)] = v;
  }
}

void for_each_partner(const SplittingType& e, const HirzebruchClass& cls,
                      const std::function<void(const SplittingType&)>& fn) {
  const int k = e.size();
  std::vector<int> f(static_cast<std::size_t>(k));
  const int target = e.total() + cls.delta;
  // f_i ranges over [max(e_i, e_{i+1} - m, f_{i-1}), e_i + delta].
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == k) {
      if (sum == target) fn(SplittingType(f));
      return;
    }
    int lo = e[i];
    if (i + 1 < k) lo = std::max(lo, e[i + 1] - cls.m);
    if (i > 0) lo = std::max(lo, f[static_cast<std::size_t>(i - 1)]);
    // Remaining entries each add at least their own e_j.
    int rest_min = 0;
    for (int j = i + 1; j < k; ++j) rest_min += e[j];
    for (int v = lo; v <= e[i] + cls.delta && sum + v + rest_min <= target; ++v) {
      f[static_cast<std::size_t>(i)] = v;
      rec(i + 1, sum + v);
    }
  };
  rec(0, 0);
}

std::vector<StratumReport> enumerate_strata(const HirzebruchClass& cls, const EnumerationOptions& opts) {
  cls.validate();
  const int g = genus(cls);
  std::optional<int> total;
  if (opts.degree) total = *opts.degree - g - cls.k + 1;
  auto window = opts.window ? *opts.window
                : total     ? window_for_total(cls, *total)
                            : default_window(cls);

  std::vector<StratumReport> out;
  auto visit = [&](const SplittingType& e) {
    if (e.size() != cls.k) throw std::invalid_argument("fixed type has the wrong length");
    if (total && e.total() != *total) return;
    if (opts.sections && section_count(e) != *opts.sections) return;
    for_each_partner(e, cls, [&](const SplittingType& f) { out.push_back(make_report(e, f, cls)); });
  };
  if (opts.e) {
    visit(*opts.e);
  } else {
    for_each_splitting_type(cls.k, window.first, window.second, visit);
  }
  return out;
}

}  // namespace hbn
