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

#include "cjhol/hol.hpp"

#include <algorithm>

namespace cjhol {

// ---------------------------------------------------------------------------
// Types

HolType HolType::o() {
  static const HolType kO(std::make_shared<const Node>(Node{Kind::kBool, nullptr, nullptr}));
  return kO;
}

HolType HolType::i() {
  static const HolType kI(std::make_shared<const Node>(Node{Kind::kInd, nullptr, nullptr}));
  return kI;
}

HolType HolType::arrow(HolType from, HolType to) {
  return HolType(std::make_shared<const Node>(
      Node{Kind::kArrow, std::make_shared<const HolType>(std::move(from)),
           std::make_shared<const HolType>(std::move(to))}));
}

HolType HolType::tau() {
  static const HolType kTau = arrow(i(), o());
  return kTau;
}

const HolType& HolType::domain() const {
  if (!is_arrow()) throw TypeError("type " + to_string() + " is not a function type");
  return *node_->from;
}

const HolType& HolType::codomain() const {
  if (!is_arrow()) throw TypeError("type " + to_string() + " is not a function type");
  return *node_->to;
}

std::string HolType::to_string() const {
  switch (kind()) {
    case Kind::kBool: return "o";
    case Kind::kInd: return "i";
    case Kind::kArrow: {
      std::string from = domain().to_string();
      if (domain().is_arrow()) from = "(" + from + ")";
      return from + ">" + codomain().to_string();
    }
  }
  return "?";
}

bool operator==(const HolType& a, const HolType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (!a.is_arrow()) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

// ---------------------------------------------------------------------------
// Terms

HolTerm HolTerm::constant(std::string name, HolType type) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kConst;
  node->name = std::move(name);
  node->type = std::make_shared<const HolType>(std::move(type));
  return HolTerm(std::move(node));
}

HolTerm HolTerm::bound(std::uint32_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kBound;
  node->index = index;
  return HolTerm(std::move(node));
}

HolTerm HolTerm::free(std::string name, HolType type) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kFree;
  node->name = std::move(name);
  node->type = std::make_shared<const HolType>(std::move(type));
  return HolTerm(std::move(node));
}

HolTerm HolTerm::app(HolTerm fun, HolTerm arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kApp;
  node->left = std::make_shared<const HolTerm>(std::move(fun));
  node->right = std::make_shared<const HolTerm>(std::move(arg));
  return HolTerm(std::move(node));
}

HolTerm HolTerm::abs(HolType binder, HolTerm body, std::string display) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAbs;
  node->name = std::move(display);
  node->type = std::make_shared<const HolType>(std::move(binder));
  node->left = std::make_shared<const HolTerm>(std::move(body));
  return HolTerm(std::move(node));
}

std::size_t HolTerm::size() const {
  switch (kind()) {
    case Kind::kApp: return 1 + fun().size() + arg().size();
    case Kind::kAbs: return 1 + body().size();
    default: return 1;
  }
}

bool operator==(const HolTerm& a, const HolTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case HolTerm::Kind::kConst:
    case HolTerm::Kind::kFree:
      return a.name() == b.name() && a.type() == b.type();
    case HolTerm::Kind::kBound:
      return a.index() == b.index();
    case HolTerm::Kind::kApp:
      return a.fun() == b.fun() && a.arg() == b.arg();
    case HolTerm::Kind::kAbs:
      return a.type() == b.type() && a.body() == b.body();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Typing

HolType type_of(const HolTerm& t, std::vector<HolType>& context) {
  switch (t.kind()) {
    case HolTerm::Kind::kConst:
    case HolTerm::Kind::kFree:
      return t.type();
    case HolTerm::Kind::kBound:
      if (t.index() >= context.size())
        throw TypeError("dangling bound index " + std::to_string(t.index()));
      return context[context.size() - 1 - t.index()];
    case HolTerm::Kind::kApp: {
      const HolType fun = type_of(t.fun(), context);
      const HolType arg = type_of(t.arg(), context);
      if (!fun.is_arrow()) {
        throw TypeError("cannot apply " + to_string(t.fun()) + " of non-function type " + fun.to_string());
      }
      if (fun.domain() != arg) {
        throw TypeError("ill-typed application " + to_string(t) + ": expected argument of type " +
                        fun.domain().to_string() + ", got " + arg.to_string());
      }
      return fun.codomain();
    }
    case HolTerm::Kind::kAbs: {
      context.push_back(t.type());
      HolType body = type_of(t.body(), context);
      context.pop_back();
      return HolType::arrow(t.type(), std::move(body));
    }
  }
  throw TypeError("unknown term");
}

HolType type_of(const HolTerm& t) {
  std::vector<HolType> context;
  return type_of(t, context);
}

// ---------------------------------------------------------------------------
// Shifting and substitution

HolTerm shift(const HolTerm& t, int delta, std::uint32_t cutoff) {
  switch (t.kind()) {
    case HolTerm::Kind::kBound:
      if (t.index() < cutoff) return t;
      return HolTerm::bound(static_cast<std::uint32_t>(static_cast<int>(t.index()) + delta));
    case HolTerm::Kind::kApp:
      return HolTerm::app(shift(t.fun(), delta, cutoff), shift(t.arg(), delta, cutoff));
    case HolTerm::Kind::kAbs:
      return HolTerm::abs(t.type(), shift(t.body(), delta, cutoff + 1), t.name());
    default:
      return t;
  }
}

bool has_loose_bound(const HolTerm& t, std::uint32_t index) {
  switch (t.kind()) {
    case HolTerm::Kind::kBound: return t.index() == index;
    case HolTerm::Kind::kApp: return has_loose_bound(t.fun(), index) || has_loose_bound(t.arg(), index);
    case HolTerm::Kind::kAbs: return has_loose_bound(t.body(), index + 1);
    default: return false;
  }
}

namespace {

// Replaces loose index `depth` by `replacement` (shifted by depth) and
// lowers the loose indices above it.
HolTerm subst_at(const HolTerm& t, std::uint32_t depth, const HolTerm& replacement) {
  switch (t.kind()) {
    case HolTerm::Kind::kBound:
      if (t.index() == depth) return shift(replacement, static_cast<int>(depth));
      if (t.index() > depth) return HolTerm::bound(t.index() - 1);
      return t;
    case HolTerm::Kind::kApp:
      return HolTerm::app(subst_at(t.fun(), depth, replacement), subst_at(t.arg(), depth, replacement));
    case HolTerm::Kind::kAbs:
      return HolTerm::abs(t.type(), subst_at(t.body(), depth + 1, replacement), t.name());
    default:
      return t;
  }
}

}  // namespace

HolTerm substitute(const HolTerm& body, const HolTerm& replacement) {
  return subst_at(body, 0, replacement);
}

HolTerm instantiate(const HolTerm& abstraction, const HolTerm& replacement) {
  if (!abstraction.is_abs()) throw TypeError("instantiate: " + to_string(abstraction) + " is not an abstraction");
  const HolType actual = type_of(replacement);
  if (actual != abstraction.type()) {
    throw TypeError("instantiate: binder expects " + abstraction.type().to_string() + ", got " +
                    actual.to_string());
  }
  return substitute(abstraction.body(), replacement);
}

// ---------------------------------------------------------------------------
// Builders

HolTerm var(const std::string& name, const HolType& type) { return HolTerm::free(name, type); }

namespace {

HolTerm close(const HolTerm& t, const std::string& name, const HolType& type, std::uint32_t depth) {
  switch (t.kind()) {
    case HolTerm::Kind::kFree:
      if (t.name() == name && t.type() == type) return HolTerm::bound(depth);
      return t;
    case HolTerm::Kind::kApp:
      return HolTerm::app(close(t.fun(), name, type, depth), close(t.arg(), name, type, depth));
    case HolTerm::Kind::kAbs:
      return HolTerm::abs(t.type(), close(t.body(), name, type, depth + 1), t.name());
    default:
      return t;
  }
}

}  // namespace

HolTerm lambda(const std::string& name, const HolType& type, const HolTerm& body) {
  return HolTerm::abs(type, close(body, name, type, 0), name);
}

HolTerm apply(const HolTerm& fun, std::initializer_list<HolTerm> args) {
  HolTerm out = fun;
  for (const HolTerm& a : args) out = HolTerm::app(out, a);
  return out;
}

HolTerm not_const() {
  static const HolTerm kNot = HolTerm::constant(kNotName, HolType::arrow(HolType::o(), HolType::o()));
  return kNot;
}

HolTerm or_const() {
  static const HolTerm kOr = HolTerm::constant(
      kOrName, HolType::arrow(HolType::o(), HolType::arrow(HolType::o(), HolType::o())));
  return kOr;
}

HolTerm pi_const(const HolType& over) {
  return HolTerm::constant(kPiName, HolType::arrow(HolType::arrow(over, HolType::o()), HolType::o()));
}

HolTerm eq_const(const HolType& over) {
  return HolTerm::constant(kEqName, HolType::arrow(over, HolType::arrow(over, HolType::o())));
}

bool is_logical_constant(const HolTerm& t) {
  return t.is_const() && (t.name() == kNotName || t.name() == kOrName || t.name() == kPiName ||
                          t.name() == kEqName);
}

HolTerm neg(const HolTerm& a) { return HolTerm::app(not_const(), a); }
HolTerm disj(const HolTerm& a, const HolTerm& b) { return apply(or_const(), {a, b}); }
HolTerm conj(const HolTerm& a, const HolTerm& b) { return neg(disj(neg(a), neg(b))); }
HolTerm implies(const HolTerm& a, const HolTerm& b) { return disj(neg(a), b); }
HolTerm iff(const HolTerm& a, const HolTerm& b) { return conj(implies(a, b), implies(b, a)); }

HolTerm forall(const std::string& name, const HolType& type, const HolTerm& body) {
  return HolTerm::app(pi_const(type), lambda(name, type, body));
}

HolTerm exists(const std::string& name, const HolType& type, const HolTerm& body) {
  return neg(forall(name, type, neg(body)));
}

HolTerm eq(const HolTerm& a, const HolTerm& b) {
  const HolType ty = type_of(a);
  const HolType other = type_of(b);
  if (ty != other) throw TypeError("eq: operand types " + ty.to_string() + " and " + other.to_string() + " differ");
  return apply(eq_const(ty), {a, b});
}

HolTerm top() {
  const HolTerm id = lambda("X", HolType::i(), var("X", HolType::i()));
  return eq(id, id);
}

HolTerm bottom() { return neg(top()); }

HolTerm leibniz_eq(const HolTerm& a, const HolTerm& b) {
  const HolType ty = type_of(a);
  const HolType other = type_of(b);
  if (ty != other) throw TypeError("leibniz_eq: operand types " + ty.to_string() + " and " + other.to_string() + " differ");
  const HolTerm p = var("P", HolType::arrow(ty, HolType::o()));
  return forall("P", HolType::arrow(ty, HolType::o()), disj(neg(HolTerm::app(p, a)), HolTerm::app(p, b)));
}

std::set<std::string> constants_of(const HolTerm& t) {
  std::set<std::string> out;
  std::vector<const HolTerm*> stack{&t};
  while (!stack.empty()) {
    const HolTerm* cur = stack.back();
    stack.pop_back();
    switch (cur->kind()) {
      case HolTerm::Kind::kConst: out.insert(cur->name()); break;
      case HolTerm::Kind::kApp: stack.push_back(&cur->fun()); stack.push_back(&cur->arg()); break;
      case HolTerm::Kind::kAbs: stack.push_back(&cur->body()); break;
      default: break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named printing

namespace {

class Printer {
 public:
  std::string print(const HolTerm& t) {
    const HolTerm* a = nullptr;
    const HolTerm* b = nullptr;
    if (match_binder(t, kPiName) ) return binder("!", t.arg());
    if (is_not(t, &a)) {
      const HolTerm* inner = nullptr;
      if (match_binder(*a, kPiName) && is_not(a->arg().body(), &inner)) {
        return binder_with_body("?", a->arg(), *inner);
      }
      if (is_or(*a, &a, &b)) {
        const HolTerm* na = nullptr;
        const HolTerm* nb = nullptr;
        if (is_not(*a, &na) && is_not(*b, &nb)) return "(" + print(*na) + " & " + print(*nb) + ")";
      }
      return "~" + atomic(*a);
    }
    if (is_or(t, &a, &b)) return "(" + print(*a) + " | " + print(*b) + ")";
    if (t.is_app() && t.fun().is_app() && t.fun().fun().is_const(kEqName)) {
      return "(" + print(t.fun().arg()) + " = " + print(t.arg()) + ")";
    }
    switch (t.kind()) {
      case HolTerm::Kind::kConst:
      case HolTerm::Kind::kFree:
        return t.name();
      case HolTerm::Kind::kBound:
        if (t.index() < names_.size()) return names_[names_.size() - 1 - t.index()];
        return "#" + std::to_string(t.index());
      case HolTerm::Kind::kApp: {
        std::vector<const HolTerm*> args;
        const HolTerm* head = &t;
        while (head->is_app()) {
          args.push_back(&head->arg());
          head = &head->fun();
        }
        std::string out = atomic(*head);
        for (auto it = args.rbegin(); it != args.rend(); ++it) out += " " + atomic(**it);
        return out;
      }
      case HolTerm::Kind::kAbs:
        return binder_with_body("^", t, t.body());
    }
    return "?";
  }

 private:
  static bool match_binder(const HolTerm& t, const std::string& name) {
    return t.is_app() && t.fun().is_const(name) && t.arg().is_abs();
  }
  static bool is_not(const HolTerm& t, const HolTerm** a) {
    if (t.is_app() && t.fun().is_const(kNotName)) {
      *a = &t.arg();
      return true;
    }
    return false;
  }
  static bool is_or(const HolTerm& t, const HolTerm** a, const HolTerm** b) {
    if (t.is_app() && t.fun().is_app() && t.fun().fun().is_const(kOrName)) {
      *a = &t.fun().arg();
      *b = &t.arg();
      return true;
    }
    return false;
  }

  std::string atomic(const HolTerm& t) {
    std::string s = print(t);
    const bool simple = t.is_const() || t.is_free() || t.is_bound() || s.front() == '(';
    if (simple) {
      // "(a | b)" is already delimited, but "(a | b) c" is not.
      if (s.front() != '(') return s;
      int level = 0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        level += s[k] == '(' ? 1 : s[k] == ')' ? -1 : 0;
        if (level == 0 && k + 1 < s.size()) return "(" + s + ")";
      }
      return s;
    }
    return "(" + s + ")";
  }

  std::string fresh(const std::string& hint) {
    std::string name = hint.empty() ? "X" : hint;
    while (std::find(names_.begin(), names_.end(), name) != names_.end()) name += "'";
    return name;
  }

  std::string binder(const char* quant, const HolTerm& abstraction) {
    return binder_with_body(quant, abstraction, abstraction.body());
  }

  std::string binder_with_body(const char* quant, const HolTerm& abstraction, const HolTerm& body) {
    const std::string name = fresh(abstraction.name());
    names_.push_back(name);
    std::string out = std::string(quant) + name + ":" + abstraction.type().to_string() + ". " + print(body);
    names_.pop_back();
    return out;
  }

  std::vector<std::string> names_;
};

}  // namespace

std::string to_string(const HolTerm& t) { return Printer().print(t); }

}  // namespace cjhol
