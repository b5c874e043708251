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

#include "cjhol/thf.hpp"

#include <algorithm>
#include <cctype>

#include "cjhol/embed.hpp"

namespace cjhol {

std::string to_thf_type(const HolType& type) {
  switch (type.kind()) {
    case HolType::Kind::kBool: return "$o";
    case HolType::Kind::kInd: return "$i";
    case HolType::Kind::kArrow: break;
  }
  std::string dom = to_thf_type(type.domain());
  if (type.domain().is_arrow()) dom = "(" + dom + ")";
  return dom + " > " + to_thf_type(type.codomain());
}

namespace {

int logical_arity(const std::string& name) { return name == kNotName || name == kPiName ? 1 : 2; }

struct Spine {
  const HolTerm* head;
  std::vector<const HolTerm*> args;
};

Spine spine(const HolTerm& t) {
  Spine s{&t, {}};
  while (s.head->is_app()) {
    s.args.push_back(&s.head->arg());
    s.head = &s.head->fun();
  }
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

// t x1 .. xk under k fresh binders, one per missing argument.
HolTerm eta_expand(const HolTerm& t, int missing) {
  std::vector<HolType> binders;
  HolType ty = type_of(t);
  for (int k = 0; k < missing; ++k) {
    binders.push_back(ty.domain());
    ty = ty.codomain();
  }
  HolTerm body = shift(t, missing);
  for (int k = missing; k-- > 0;) body = HolTerm::app(body, HolTerm::bound(static_cast<std::uint32_t>(k)));
  for (int k = missing; k-- > 0;) body = HolTerm::abs(binders[k], body);
  return body;
}

enum class Shape { kAtomic, kParen, kUnary, kBinder };

struct Piece {
  std::string text;
  Shape shape;
};

class Renderer {
 public:
  Piece render(const HolTerm& t) {
    const Spine s = spine(t);
    const HolTerm& head = *s.head;
    if (head.is_const() && is_logical_constant(head)) {
      const int arity = logical_arity(head.name());
      if (static_cast<int>(s.args.size()) < arity) return render(eta_expand(t, arity - static_cast<int>(s.args.size())));
      if (static_cast<int>(s.args.size()) == arity) return logical(head.name(), s.args);
    }
    switch (t.kind()) {
      case HolTerm::Kind::kConst:
        return {t.name(), Shape::kAtomic};
      case HolTerm::Kind::kBound:
        if (t.index() >= names_.size()) throw ThfError("dangling bound index");
        return {names_[names_.size() - 1 - t.index()], Shape::kAtomic};
      case HolTerm::Kind::kFree:
        throw ThfError("free variable '" + t.name() + "' cannot be rendered");
      case HolTerm::Kind::kApp:
        return {"(" + operand(render(t.fun())) + " @ " + operand(render(t.arg())) + ")", Shape::kParen};
      case HolTerm::Kind::kAbs:
        return binder("^", t);
    }
    throw ThfError("unrenderable term");
  }

 private:
  static std::string operand(const Piece& p) {
    return p.shape == Shape::kAtomic || p.shape == Shape::kParen ? p.text : "(" + p.text + ")";
  }

  // Operands of | = and & may also be negations.
  static std::string connective_operand(const Piece& p) {
    return p.shape == Shape::kUnary ? p.text : operand(p);
  }

  Piece binder(const std::string& symbol, const HolTerm& abs) {
    std::string name = "V" + std::to_string(names_.size());
    const std::string head = symbol + "[" + name + ":" + to_thf_type(abs.type()) + "]: ";
    names_.push_back(std::move(name));
    Piece body = render(abs.body());
    names_.pop_back();
    return {head + body.text, Shape::kBinder};
  }

  static const HolTerm* negated(const HolTerm& t) {
    if (t.is_app() && t.fun().is_const(kNotName)) return &t.arg();
    return nullptr;
  }

  Piece logical(const std::string& name, const std::vector<const HolTerm*>& args) {
    if (name == kNotName) {
      const Spine inner = spine(*args[0]);
      if (inner.head->is_const(kOrName) && inner.args.size() == 2) {
        const HolTerm* a = negated(*inner.args[0]);
        const HolTerm* b = negated(*inner.args[1]);
        if (a && b) return {"(" + connective_operand(render(*a)) + " & " + connective_operand(render(*b)) + ")", Shape::kParen};
      }
      if (inner.head->is_const(kPiName) && inner.args.size() == 1 && inner.args[0]->is_abs()) {
        const HolTerm& pred = *inner.args[0];
        if (const HolTerm* body = negated(pred.body())) {
          return binder("?", HolTerm::abs(pred.type(), *body, pred.name()));
        }
      }
      return {"~" + operand(render(*args[0])), Shape::kUnary};
    }
    if (name == kPiName) {
      if (args[0]->is_abs()) return binder("!", *args[0]);
      return binder("!", eta_expand(*args[0], 1));
    }
    const std::string symbol = name == kOrName ? " | " : " = ";
    return {"(" + connective_operand(render(*args[0])) + symbol + connective_operand(render(*args[1])) + ")", Shape::kParen};
  }

  std::vector<std::string> names_;
};

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

ThfProblem declarations(const std::set<std::string>& atom_names) {
  ThfProblem p;
  auto declare = [&](const std::string& name, const HolType& type) {
    p.formulas.push_back({name + "_type", "type", name + ": " + to_thf_type(type)});
  };
  declare(kAvName, av_const().type());
  declare(kPvName, pv_const().type());
  declare(kObName, ob_const().type());
  for (const auto& a : atom_names) declare(a, HolType::tau());
  for (const auto& ax : axioms()) p.formulas.push_back({"ax_" + lowercase(ax.name), "axiom", to_thf_term(ax.term)});
  return p;
}

}  // namespace

std::string to_thf_term(const HolTerm& t) { return Renderer().render(t).text; }

std::string ThfProblem::to_string() const {
  std::string out;
  for (const auto& f : formulas) out += "thf(" + f.name + ", " + f.role + ", " + f.body + ").\n";
  return out;
}

ThfProblem to_thf_problem(const Formula& f) {
  ThfProblem p = declarations(atoms(f));
  p.formulas.push_back({"goal", "conjecture", to_thf_term(vld(embed(f)))});
  return p;
}

ThfProblem axioms_problem() { return declarations({}); }

}  // namespace cjhol
