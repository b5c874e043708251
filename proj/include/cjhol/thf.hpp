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

// TPTP THF0 rendering of closed HOL terms and CJ problems.

#ifndef CJHOL_THF_HPP_
#define CJHOL_THF_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "cjhol/formula.hpp"
#include "cjhol/hol.hpp"

namespace cjhol {

class ThfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// $o, $i and right-associated >, e.g. ($i > $o) > $o.
std::string to_thf_type(const HolType& type);

// Binders are named V<depth>. Pi over a lambda becomes !, its negated
// dual ?, the pattern ~(~a | ~b) becomes &. Other partial applications
// of logical constants are eta-expanded first. Throws ThfError on free
// variables.
std::string to_thf_term(const HolTerm& t);

struct ThfFormula {
  std::string name;
  std::string role;  // type, axiom or conjecture
  std::string body;
};

struct ThfProblem {
  std::vector<ThfFormula> formulas;
  // One thf(name, role, body). line per formula.
  std::string to_string() const;
};

// Declarations of av, pv, ob and each atom of f, the eight frame axioms,
// then vld(embed(f)) as the conjecture.
ThfProblem to_thf_problem(const Formula& f);
// Declarations of av, pv and ob followed by the eight frame axioms.
ThfProblem axioms_problem();

}  // namespace cjhol

#endif  // CJHOL_THF_HPP_
