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

#include "hbn/scrollar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hbn {

namespace {

nlohmann::json entries_json(const SplittingType& t) { return t.entries(); }

// Weakly increasing tuples (0, x_2, ..., x_k) with x_k <= bound.
template <class Fn>
void for_each_normalized(int k, int bound, Fn fn) {
  if (k == 1) {
    fn(SplittingType({0}));
    return;
  }
  for_each_splitting_type(k - 1, 0, bound, [&](const SplittingType& tail) {
    std::vector<int> v{0};
    v.insert(v.end(), tail.entries().begin(), tail.entries().end());
    fn(SplittingType(std::move(v)));
  });
}

SplittingType directrix_witness(const HirzebruchClass& cls) {
  const int m = cls.m;
  const int d = cls.delta;
  std::vector<int> e{0, m + d, m + d};
  while (static_cast<int>(e.size()) < cls.k) e.push_back(2 * m + d + 1);
  return SplittingType(std::move(e));
}

}  // namespace

ScrollarInvariants::ScrollarInvariants(std::vector<int> a) : a_(std::move(a)) {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < 0 || (i > 0 && a_[i] < a_[i - 1])) {
      throw std::invalid_argument("scrollar invariants must be nonnegative and weakly increasing");
    }
  }
}

bool ScrollarInvariants::subadditive() const {
  const int n = degree() - 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; i + j <= n; ++j) {
      if (at(i + j) > at(i) + at(j)) return false;
    }
  }
  return true;
}

std::string ScrollarInvariants::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
  return s + ")";
}

ScrollarInvariants scrollar_from_structure_type(const SplittingType& structure) {
  const int k = structure.size();
  if (structure[k - 1] != 0) throw std::invalid_argument("structure sheaf type must end in its trivial summand");
  std::vector<int> a;
  for (int i = 1; i <= k - 1; ++i) a.push_back(-structure[k - 1 - i]);
  return ScrollarInvariants(std::move(a));
}

ScrollarInvariants scrollar_invariants(const HirzebruchClass& cls) {
  cls.validate();
  std::vector<int> a;
  for (int i = 1; i < cls.k; ++i) a.push_back(i * cls.m + cls.delta);
  ScrollarInvariants out(std::move(a));
  if (!(scrollar_from_structure_type(structure_sheaf_type(cls)) == out)) {
    throw InternalInconsistency("scrollar invariants disagree with the structure sheaf type");
  }
  return out;
}

TripleConstraintReport general_bound_check(const SplittingType& d, const SplittingType& e, const SplittingType& f,
                                           int genus) {
  const int k = d.size();
  if (e.size() != k || f.size() != k) throw std::invalid_argument("bound check needs types of equal length");
  TripleConstraintReport r{d, e, f, {}, false};
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const int l = i + j - k;
      if (l < 1 || l > k) continue;
      if (f[l - 1] < d[i - 1] + e[j - 1]) r.violations.emplace_back(i, j);
    }
  }
  r.degree_ok = d.total() + e.total() - f.total() == -(genus + k - 1);
  return r;
}

std::vector<ScrollarInvariants> oo_polytope(int k, int bound) {
  if (k < 2) throw std::invalid_argument("scrollar invariants need k >= 2");
  std::vector<ScrollarInvariants> out;
  if (bound < 1) return out;
  for_each_splitting_type(k - 1, 1, bound, [&](const SplittingType& t) {
    ScrollarInvariants a(t.entries());
    if (a.subadditive()) out.push_back(std::move(a));
  });
  return out;
}

bool in_ol_polytope(const ScrollarInvariants& a, const SplittingType& e) {
  const int k = e.size();
  if (a.degree() != k) throw std::invalid_argument("scrollar invariants and type have different degrees");
  for (int i = 1; i < k; ++i) {
    for (int j = 1; i + j <= k; ++j) {
      if (e[i + j - 1] > a.at(i) + e[j - 1]) return false;
    }
  }
  return true;
}

std::vector<SplittingType> ol_polytope(const ScrollarInvariants& a, int e_bound) {
  if (!a.subadditive()) throw std::invalid_argument("scrollar invariants " + a.to_string() + " are not subadditive");
  std::vector<SplittingType> out;
  for_each_normalized(a.degree(), e_bound, [&](const SplittingType& e) {
    if (in_ol_polytope(a, e)) out.push_back(e);
  });
  return out;
}

int default_e_bound(const HirzebruchClass& cls) { return (cls.k - 1) * cls.m + cls.delta + 2; }

AbundanceReport abundance_verdict(const HirzebruchClass& cls, int e_bound) {
  const auto a = scrollar_invariants(cls);
  const auto conjectured = ol_polytope(a, e_bound);
  std::vector<SplittingType> realizable;
  for_each_normalized(cls.k, e_bound, [&](const SplittingType& e) {
    if (corollary_check(e, cls)) realizable.push_back(e);
  });
  const std::set<SplittingType> conj_set(conjectured.begin(), conjectured.end());
  for (const auto& e : realizable) {
    if (!conj_set.count(e)) {
      throw InternalInconsistency("realizable type " + e.to_string() + " violates the conjectured inequalities");
    }
  }
  AbundanceReport r{cls, a, e_bound, static_cast<int>(conjectured.size()), static_cast<int>(realizable.size()), false, {}, {}};
  const std::set<SplittingType> real_set(realizable.begin(), realizable.end());
  for (const auto& e : conjectured) {
    if (!real_set.count(e)) r.difference.push_back(e);
  }
  r.abundant = r.difference.empty();
  if (!r.abundant) {
    r.witness = r.difference.front();
    if (cls.m * cls.delta != 0 && cls.k >= 4) {
      const auto constructed = directrix_witness(cls);
      if (std::binary_search(r.difference.begin(), r.difference.end(), constructed)) r.witness = constructed;
    }
  }
  return r;
}

std::optional<GeneralCoverWitness> general_cover_not_abundant(int k, int genus) {
  if (k <= 3 || genus < 2 * (k - 1)) return std::nullopt;
  const int d = genus / (k - 1) + 1;
  const int l = genus % (k - 1);
  std::vector<int> a(static_cast<std::size_t>(k - 1), d);
  std::fill(a.end() - l, a.end(), d + 1);
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  e[static_cast<std::size_t>(k - 2)] = d;
  e[static_cast<std::size_t>(k - 1)] = d;
  GeneralCoverWitness w{k, genus, ScrollarInvariants(std::move(a)), SplittingType(std::move(e)), 0, true};
  if (!w.a.subadditive() || !in_ol_polytope(w.a, w.e)) {
    throw InternalInconsistency("general cover candidate " + w.e.to_string() + " is not conjectured");
  }
  w.u = expected_codimension(w.e);
  if (w.u > genus) return w;
  // The polytope forces e_k <= e_1 + a_{k-1}, so this search is complete.
  for (const auto& candidate : ol_polytope(w.a, w.a.at(k - 1))) {
    const int u = expected_codimension(candidate);
    if (u > genus) return GeneralCoverWitness{k, genus, w.a, candidate, u, false};
  }
  return std::nullopt;
}

nlohmann::json to_json(const TripleConstraintReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& [i, j] : r.violations) v.push_back({i, j});
  return {{"d", entries_json(r.d)},
          {"e", entries_json(r.e)},
          {"f", entries_json(r.f)},
          {"violations", v},
          {"degree_ok", r.degree_ok}};
}

nlohmann::json to_json(const AbundanceReport& r) {
  nlohmann::json diff = nlohmann::json::array();
  for (const auto& e : r.difference) diff.push_back(entries_json(e));
  nlohmann::json j{{"m", r.cls.m},
                   {"k", r.cls.k},
                   {"delta", r.cls.delta},
                   {"scrollar", r.a.entries()},
                   {"e_bound", r.e_bound},
                   {"conjectured", r.conjectured},
                   {"realizable", r.realizable},
                   {"verdict", r.abundant ? "ABUNDANT" : "NOT_ABUNDANT"},
                   {"difference", diff}};
  if (r.witness) j["witness"] = entries_json(*r.witness);
  return j;
}

nlohmann::json to_json(const GeneralCoverWitness& w) {
  return {{"k", w.k}, {"g", w.genus}, {"scrollar", w.a.entries()}, {"witness", entries_json(w.e)}, {"u", w.u},
          {"method", w.constructed ? "construction" : "search"}};
}

}  // namespace hbn
