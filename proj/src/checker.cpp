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

#include "cjhol/checker.hpp"

#include <stdexcept>

namespace cjhol {

namespace {

class TruthSets {
 public:
  TruthSets(const CJModel& m, std::vector<std::string>* warnings) : m_(m), warnings_(warnings) {}

  Prop operator()(const Formula& f) {
    const Prop all = m_.worlds();
    switch (f.op()) {
      case Op::kAtom: {
        auto it = m_.val.find(f.name());
        if (it != m_.val.end()) return it->second;
        if (warnings_ && f.name() != kReservedAtom) {
          warnings_->push_back("atom '" + f.name() + "' has no valuation; using the empty set");
        }
        return Prop{};
      }
      case Op::kNot:
        return complement((*this)(f.child()), m_.n);
      case Op::kOr:
        return (*this)(f.lhs()) | (*this)(f.rhs());
      case Op::kBox:
        return (*this)(f.child()) == all ? all : Prop{};
      case Op::kBoxA:
        return per_world(f.child(), [&](int s, Prop v) { return m_.av[s].subset_of(v); });
      case Op::kBoxP:
        return per_world(f.child(), [&](int s, Prop v) { return m_.pv[s].subset_of(v); });
      case Op::kObDyadic: {
        const Prop context = (*this)(f.antecedent());
        const Prop member = (*this)(f.consequent());
        return m_.obligatory(context, member) ? all : Prop{};
      }
      case Op::kObA:
        return per_world(f.child(), [&](int s, Prop v) {
          return m_.obligatory(m_.av[s], v) && !(m_.av[s] - v).empty();
        });
      case Op::kObP:
        return per_world(f.child(), [&](int s, Prop v) {
          return m_.obligatory(m_.pv[s], v) && !(m_.pv[s] - v).empty();
        });
    }
    throw std::logic_error("unknown formula operator");
  }

 private:
  template <typename Pred>
  Prop per_world(const Formula& sub, Pred holds) {
    const Prop v = (*this)(sub);
    Prop out;
    for (int s = 0; s < m_.n; ++s)
      if (holds(s, v)) out = out | Prop::world(s);
    return out;
  }

  const CJModel& m_;
  std::vector<std::string>* warnings_;
};

}  // namespace

Prop truth_set(const CJModel& m, const Formula& f, std::vector<std::string>* warnings) {
  return TruthSets(m, warnings)(f);
}

bool eval(const CJModel& m, int world, const Formula& f, std::vector<std::string>* warnings) {
  if (world < 0 || world >= m.n) {
    throw std::out_of_range("world " + std::to_string(world) + " out of range 0.." + std::to_string(m.n - 1));
  }
  return truth_set(m, f, warnings).contains(world);
}

bool valid_in_model(const CJModel& m, const Formula& f, std::vector<std::string>* warnings) {
  return truth_set(m, f, warnings) == m.worlds();
}

}  // namespace cjhol
