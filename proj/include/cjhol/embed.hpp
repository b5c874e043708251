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

// Shallow embedding of CJ formulas as HOL predicates over worlds.
//
// A formula becomes a term of type tau = i>o. The CJ connectives are
// lambda terms over the signature constants
//
//   av : i>i>o      pv : i>i>o      ob : (i>o)>(i>o)>o
//
// plus one constant of type tau per propositional atom. Validity of an
// embedded formula is vld = \A:tau. !S:i. A S.

#ifndef CJHOL_EMBED_HPP_
#define CJHOL_EMBED_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cjhol/formula.hpp"
#include "cjhol/hol.hpp"

namespace cjhol {

inline const std::string kAvName = "av";
inline const std::string kPvName = "pv";
inline const std::string kObName = "ob";

HolTerm av_const();
HolTerm pv_const();
HolTerm ob_const();
HolTerm atom_const(const std::string& name);

// Non-logical signature: av, pv, ob and one tau constant per atom.
std::map<std::string, HolType> cj_signature(const std::set<std::string>& atom_names);

// The lifted connectives, as closed lambda terms.
namespace lifted {
HolTerm neg();     // \A \X. ~(A X)
HolTerm disj();    // \A \B \X. A X | B X
HolTerm box();     // \A \X. !Y. A Y
HolTerm ob();      // \A \B \X. ob A B   (A is the context)
HolTerm box_a();   // \A \X. !Y. ~(av X Y) | A Y
HolTerm box_p();
HolTerm ob_a();    // \A \X. ob (av X) A & ?Y. av X Y & ~(A Y)
HolTerm ob_p();
HolTerm vld();     // \A. !S. A S
}  // namespace lifted

// The embedding with every connective expanded in place (not normalized).
HolTerm embed(const Formula& f);

// !S:i. t S, beta-eta normalized. Throws TypeError unless t : tau.
HolTerm vld(const HolTerm& t);

struct NamedAxiom {
  std::string name;  // AV, PV1, PV2, OB1 .. OB5
  HolTerm term;
};

// The frame axioms on av, pv and ob, beta-eta normalized, in the order
// AV, PV1, PV2, OB1, OB2, OB3, OB4, OB5.
const std::vector<NamedAxiom>& axioms();

}  // namespace cjhol

#endif  // CJHOL_EMBED_HPP_
