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

#include "hbn/resultant.hpp"

namespace hbn {

BivariatePoly::BivariatePoly(PrimeField field, std::map<Exponent, Elem> terms)
    : field_(field) {
  for (auto [e, c] : terms) {
    c %= field_.characteristic();
    if (c != 0) terms_[e] = c;
  }
}

BivariatePoly::Elem BivariatePoly::coeff(int s_power, int t_power) const {
  auto it = terms_.find({s_power, t_power});
  return it == terms_.end() ? 0 : it->second;
}

BivariatePoly::Elem BivariatePoly::evaluate(Elem s, Elem t) const {
  Elem acc = 0;
  for (const auto& [e, c] : terms_) {
    acc = field_.add(acc, field_.mul(c, field_.mul(field_.pow(s, static_cast<std::uint64_t>(e.first)),
                                                   field_.pow(t, static_cast<std::uint64_t>(e.second)))));
  }
  return acc;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& [e, c] : r.terms_) c = field_.neg(c);
  return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) continue;
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r(a.field_);
  const auto& F = a.field_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const BivariatePoly::Exponent e{ea.first + eb.first, ea.second + eb.second};
      auto [it, inserted] = r.terms_.try_emplace(e, F.mul(ca, cb));
      if (inserted) continue;
      it->second = F.add(it->second, F.mul(ca, cb));
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

BivariatePoly BivariatePoly::scaled(Elem c) const {
  BivariatePoly r(field_);
  for (const auto& [e, v] : terms_) {
    const auto w = field_.mul(v, c);
    if (w != 0) r.terms_[e] = w;
  }
  return r;
}

BivariatePoly resultant(const std::vector<BivariatePoly>& a, const std::vector<BivariatePoly>& b) {
  const PrimeField field = !a.empty() ? a.front().field()
                           : !b.empty() ? b.front().field()
                                        : PrimeField();
  return sylvester_resultant(a, b, BivariatePoly(field), BivariatePoly::constant(field, 1));
}

}  // namespace hbn
