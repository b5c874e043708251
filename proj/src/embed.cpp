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

#include "cjhol/embed.hpp"

namespace cjhol {

namespace {

const HolType& o() {
  static const HolType t = HolType::o();
  return t;
}
const HolType& i() {
  static const HolType t = HolType::i();
  return t;
}
const HolType& tau() {
  static const HolType t = HolType::tau();
  return t;
}

HolTerm app(const HolTerm& f, const HolTerm& a) { return HolTerm::app(f, a); }

const HolType& rel_type() {
  static const HolType t = HolType::arrow(HolType::i(), HolType::tau());
  return t;
}

}  // namespace

HolTerm av_const() { return HolTerm::constant(kAvName, rel_type()); }
HolTerm pv_const() { return HolTerm::constant(kPvName, rel_type()); }
HolTerm ob_const() {
  return HolTerm::constant(kObName, HolType::arrow(tau(), HolType::arrow(tau(), o())));
}
HolTerm atom_const(const std::string& name) { return HolTerm::constant(name, tau()); }

std::map<std::string, HolType> cj_signature(const std::set<std::string>& atom_names) {
  std::map<std::string, HolType> sig;
  sig.emplace(kAvName, av_const().type());
  sig.emplace(kPvName, pv_const().type());
  sig.emplace(kObName, ob_const().type());
  for (const auto& a : atom_names) sig.emplace(a, tau());
  return sig;
}

namespace lifted {

namespace {
const HolTerm& A() {
  static const HolTerm t = var("A", HolType::tau());
  return t;
}
const HolTerm& B() {
  static const HolTerm t = var("B", HolType::tau());
  return t;
}
const HolTerm& X() {
  static const HolTerm t = var("X", HolType::i());
  return t;
}
const HolTerm& Y() {
  static const HolTerm t = var("Y", HolType::i());
  return t;
}

HolTerm over_ax(const HolTerm& body) { return lambda("A", tau(), lambda("X", i(), body)); }

HolTerm box_rel(const HolTerm& rel) {
  return over_ax(forall("Y", i(), disj(cjhol::neg(apply(rel, {X(), Y()})), app(A(), Y()))));
}

HolTerm ob_rel(const HolTerm& rel) {
  return over_ax(conj(apply(ob_const(), {app(rel, X()), A()}),
                      exists("Y", i(), conj(apply(rel, {X(), Y()}), cjhol::neg(app(A(), Y()))))));
}
}  // namespace

HolTerm neg() { return over_ax(cjhol::neg(app(A(), X()))); }

HolTerm disj() {
  return lambda("A", tau(), lambda("B", tau(), lambda("X", i(), cjhol::disj(app(A(), X()), app(B(), X())))));
}

HolTerm box() { return over_ax(forall("Y", i(), app(A(), Y()))); }

HolTerm ob() {
  return lambda("A", tau(), lambda("B", tau(), lambda("X", i(), apply(ob_const(), {A(), B()}))));
}

HolTerm box_a() { return box_rel(av_const()); }
HolTerm box_p() { return box_rel(pv_const()); }
HolTerm ob_a() { return ob_rel(av_const()); }
HolTerm ob_p() { return ob_rel(pv_const()); }

HolTerm vld() {
  return lambda("A", tau(), forall("S", i(), app(A(), var("S", i()))));
}

}  // namespace lifted

HolTerm embed(const Formula& f) {
  switch (f.op()) {
    case Op::kAtom: return atom_const(f.name());
    case Op::kNot: return app(lifted::neg(), embed(f.child()));
    case Op::kOr: return apply(lifted::disj(), {embed(f.lhs()), embed(f.rhs())});
    case Op::kBox: return app(lifted::box(), embed(f.child()));
    case Op::kBoxA: return app(lifted::box_a(), embed(f.child()));
    case Op::kBoxP: return app(lifted::box_p(), embed(f.child()));
    // O(psi / phi) embeds as the lifted ob applied to phi, then psi.
    case Op::kObDyadic: return apply(lifted::ob(), {embed(f.antecedent()), embed(f.consequent())});
    case Op::kObA: return app(lifted::ob_a(), embed(f.child()));
    case Op::kObP: return app(lifted::ob_p(), embed(f.child()));
  }
  throw std::logic_error("unknown formula operator");
}

HolTerm vld(const HolTerm& t) {
  const HolType ty = type_of(t);
  if (ty != tau()) throw TypeError("vld expects a term of type i>o, got " + ty.to_string());
  return beta_eta_normalize(app(lifted::vld(), t));
}

namespace {

std::vector<NamedAxiom> build_axioms() {
  const HolTerm W = var("W", i());
  const HolTerm V = var("V", i());
  const HolTerm X = var("X", tau());
  const HolTerm Y = var("Y", tau());
  const HolTerm Z = var("Z", tau());
  const HolType pred = HolType::arrow(tau(), o());
  const HolTerm beta = var("B", pred);
  const HolTerm av = av_const();
  const HolTerm pv = pv_const();
  const HolTerm ob = ob_const();
  auto forall_xyz = [&](const HolTerm& body) {
    return forall("X", tau(), forall("Y", tau(), forall("Z", tau(), body)));
  };
  // Y within X, as !W. Y W -> X W.
  auto within = [&](const HolTerm& small, const HolTerm& big) {
    return forall("W", i(), implies(app(small, W), app(big, W)));
  };

  std::vector<NamedAxiom> out;
  out.push_back({"AV", forall("W", i(), exists("V", i(), apply(av, {W, V})))});
  out.push_back({"PV1", forall("W", i(), forall("V", i(), implies(apply(av, {W, V}), apply(pv, {W, V}))))});
  out.push_back({"PV2", forall("W", i(), apply(pv, {W, W}))});

  // The empty proposition is the constant-false predicate \W. F.
  const HolTerm empty = lambda("W", i(), bottom());
  out.push_back({"OB1", forall("X", tau(), cjhol::neg(apply(ob, {X, empty})))});

  out.push_back({"OB2", forall_xyz(implies(
                            forall("W", i(), iff(conj(app(Y, W), app(X, W)), conj(app(Z, W), app(X, W)))),
                            iff(apply(ob, {X, Y}), apply(ob, {X, Z}))))});

  // beta ranges over sets of propositions (type tau>o); meet is their
  // intersection \W. !Z. beta Z -> Z W.
  const HolTerm meet = lambda("W", i(), forall("Z", tau(), implies(app(beta, Z), app(Z, W))));
  out.push_back(
      {"OB3",
       forall("B", pred,
              forall("X", tau(),
                     implies(conj(forall("Z", tau(), implies(app(beta, Z), apply(ob, {X, Z}))),
                                  exists("Z", tau(), app(beta, Z))),
                             implies(exists("V", i(), conj(app(meet, V), app(X, V))),
                                     apply(ob, {X, meet})))))});

  const HolTerm lifted_y =
      lambda("W", i(), cjhol::disj(conj(app(Z, W), cjhol::neg(app(X, W))), app(Y, W)));
  out.push_back({"OB4", forall_xyz(implies(conj(conj(within(Y, X), apply(ob, {X, Y})), within(X, Z)),
                                           apply(ob, {Z, lifted_y})))});

  out.push_back({"OB5", forall_xyz(implies(conj(conj(within(Y, X), apply(ob, {X, Z})),
                                                exists("W", i(), conj(app(Y, W), app(Z, W)))),
                                           apply(ob, {Y, Z})))});

  for (auto& ax : out) ax.term = beta_eta_normalize(ax.term);
  return out;
}

}  // namespace

const std::vector<NamedAxiom>& axioms() {
  static const std::vector<NamedAxiom> kAxioms = build_axioms();
  return kAxioms;
}

}  // namespace cjhol
