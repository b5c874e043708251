/* Copyright 2026 The cjhol Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Independent reference semantics for CJ, written world by world from
// the truth conditions rather than with the bitmask set algebra used by
// the checker.

#ifndef CJHOL_TESTS_SUPPORT_CJ_ORACLE_HPP_
#define CJHOL_TESTS_SUPPORT_CJ_ORACLE_HPP_

#include <functional>
#include <vector>

#include "cjhol/formula.hpp"
#include "cjhol/model.hpp"

namespace cjhol::testing {

// Y in ob(X) read straight from the definition of a trace.
inline bool member_of_ob(const CJModel& m, std::uint32_t x, std::uint32_t y) {
  for (Prop t : m.traces(Prop{x}))
    if (t.bits == (x & y)) return true;
  return false;
}

inline std::vector<bool> oracle_extension(const CJModel& m, const Formula& f);

inline bool oracle_eval(const CJModel& m, int s, const Formula& f) {
  auto ext_bits = [&](const Formula& g) {
    std::uint32_t bits = 0;
    const auto e = oracle_extension(m, g);
    for (int t = 0; t < m.n; ++t)
      if (e[t]) bits |= 1u << t;
    return bits;
  };
  auto all_in = [&](Prop scope, const Formula& g) {
    for (int t = 0; t < m.n; ++t)
      if (scope.contains(t) && !oracle_eval(m, t, g)) return false;
    return true;
  };
  auto some_fails_in = [&](Prop scope, const Formula& g) { return !all_in(scope, g); };
  switch (f.op()) {
    case Op::kAtom: {
      auto it = m.val.find(f.name());
      return it != m.val.end() && it->second.contains(s);
    }
    case Op::kNot: return !oracle_eval(m, s, f.child());
    case Op::kOr: return oracle_eval(m, s, f.lhs()) || oracle_eval(m, s, f.rhs());
    case Op::kBox: return all_in(m.worlds(), f.child());
    case Op::kBoxA: return all_in(m.av[s], f.child());
    case Op::kBoxP: return all_in(m.pv[s], f.child());
    case Op::kObDyadic: return member_of_ob(m, ext_bits(f.antecedent()), ext_bits(f.consequent()));
    case Op::kObA:
      return member_of_ob(m, m.av[s].bits, ext_bits(f.child())) && some_fails_in(m.av[s], f.child());
    case Op::kObP:
      return member_of_ob(m, m.pv[s].bits, ext_bits(f.child())) && some_fails_in(m.pv[s], f.child());
  }
  return false;
}

inline std::vector<bool> oracle_extension(const CJModel& m, const Formula& f) {
  std::vector<bool> out(m.n);
  for (int s = 0; s < m.n; ++s) out[s] = oracle_eval(m, s, f);
  return out;
}

// Condition 3 checked over every nonempty subfamily of ob(X), with the
// members of ob(X) listed in full (not by trace).
inline bool ob3_all_families(const CJModel& m, std::uint32_t x) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t y = 0; y < static_cast<std::uint32_t>(m.num_props()); ++y)
    if (member_of_ob(m, x, y)) members.push_back(y);
  if (members.size() > 20) throw std::logic_error("family too large for the subset oracle");
  const std::uint64_t families = std::uint64_t{1} << members.size();
  for (std::uint64_t beta = 1; beta < families; ++beta) {
    std::uint32_t meet = m.worlds().bits;
    for (std::size_t k = 0; k < members.size(); ++k)
      if ((beta >> k) & 1) meet &= members[k];
    if ((meet & x) != 0 && !member_of_ob(m, x, meet)) return false;
  }
  return true;
}

}  // namespace cjhol::testing

#endif  // CJHOL_TESTS_SUPPORT_CJ_ORACLE_HPP_
