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

#include "cjhol/formula.hpp"

#include <algorithm>

#include "cjhol/rng.hpp"

namespace cjhol {

Formula Formula::make(Op op, std::string name, const Formula* lhs, const Formula* rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  if (lhs) node->lhs = std::make_shared<const Formula>(*lhs);
  if (rhs) node->rhs = std::make_shared<const Formula>(*rhs);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) throw std::invalid_argument("not an atom name: '" + name + "'");
  return make(Op::kAtom, std::move(name), nullptr, nullptr);
}
Formula Formula::neg(Formula f) { return make(Op::kNot, {}, &f, nullptr); }
Formula Formula::disj(Formula lhs, Formula rhs) { return make(Op::kOr, {}, &lhs, &rhs); }
Formula Formula::box(Formula f) { return make(Op::kBox, {}, &f, nullptr); }
Formula Formula::box_a(Formula f) { return make(Op::kBoxA, {}, &f, nullptr); }
Formula Formula::box_p(Formula f) { return make(Op::kBoxP, {}, &f, nullptr); }
Formula Formula::ob(Formula antecedent, Formula consequent) {
  return make(Op::kObDyadic, {}, &antecedent, &consequent);
}
Formula Formula::ob_a(Formula f) { return make(Op::kObA, {}, &f, nullptr); }
Formula Formula::ob_p(Formula f) { return make(Op::kObP, {}, &f, nullptr); }

Formula Formula::conj(Formula lhs, Formula rhs) {
  return neg(disj(neg(std::move(lhs)), neg(std::move(rhs))));
}
Formula Formula::implies(Formula lhs, Formula rhs) {
  return disj(neg(std::move(lhs)), std::move(rhs));
}
Formula Formula::iff(Formula lhs, Formula rhs) {
  return conj(implies(lhs, rhs), implies(rhs, lhs));
}
Formula Formula::diamond(Formula f) { return neg(box(neg(std::move(f)))); }
Formula Formula::diamond_a(Formula f) { return neg(box_a(neg(std::move(f)))); }
Formula Formula::diamond_p(Formula f) { return neg(box_p(neg(std::move(f)))); }
Formula Formula::top() {
  Formula q = atom(std::string(kReservedAtom));
  return disj(neg(q), q);
}
Formula Formula::bottom() { return neg(top()); }

bool Formula::is_unary() const {
  switch (op()) {
    case Op::kAtom:
    case Op::kOr:
    case Op::kObDyadic:
      return false;
    default:
      return true;
  }
}

std::size_t Formula::size() const {
  if (op() == Op::kAtom) return 1;
  if (is_unary()) return 1 + child().size();
  return 1 + lhs().size() + rhs().size();
}

std::size_t Formula::depth() const {
  if (op() == Op::kAtom) return 0;
  if (is_unary()) return 1 + child().depth();
  return 1 + std::max(lhs().depth(), rhs().depth());
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.op() == Op::kAtom) return a.name() == b.name();
  if (a.is_unary()) return a.child() == b.child();
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

bool is_identifier(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

bool is_signature_name(std::string_view s) { return s == "av" || s == "pv" || s == "ob"; }

namespace {

// Binding strength used to decide where pretty() needs parentheses.
// Only | is binary in the primitive AST; it is left-associative.
void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, std::string& out) {
  if (f.op() == Op::kOr) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::kAtom:
      out += f.name();
      return;
    case Op::kNot:
      out += '~';
      print_operand(f.child(), out);
      return;
    case Op::kOr:
      print(f.lhs(), out);
      out += " | ";
      print_operand(f.rhs(), out);
      return;
    case Op::kBox:
      out += "[]";
      print_operand(f.child(), out);
      return;
    case Op::kBoxA:
      out += "[a]";
      print_operand(f.child(), out);
      return;
    case Op::kBoxP:
      out += "[p]";
      print_operand(f.child(), out);
      return;
    case Op::kObDyadic:
      out += "O(";
      print(f.consequent(), out);
      out += " / ";
      print(f.antecedent(), out);
      out += ')';
      return;
    case Op::kObA:
    case Op::kObP:
      out += f.op() == Op::kObA ? "Oa(" : "Op(";
      print(f.child(), out);
      out += ')';
      return;
  }
}

void collect(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::kAtom) {
    out.insert(f.name());
  } else if (f.is_unary()) {
    collect(f.child(), out);
  } else {
    collect(f.lhs(), out);
    collect(f.rhs(), out);
  }
}

}  // namespace

std::string pretty(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

Formula random_formula(std::mt19937_64& rng, int max_depth,
                       const std::vector<std::string>& atom_names) {
  if (atom_names.empty()) throw std::invalid_argument("random_formula: no atoms");
  auto leaf = [&] { return Formula::atom(atom_names[below(rng, atom_names.size())]); };
  if (max_depth <= 0) return leaf();
  auto sub = [&] { return random_formula(rng, max_depth - 1, atom_names); };
  switch (below(rng, 9)) {
    case 0: return leaf();
    case 1: return Formula::neg(sub());
    case 2: { Formula l = sub(); return Formula::disj(l, sub()); }
    case 3: return Formula::box(sub());
    case 4: return Formula::box_a(sub());
    case 5: return Formula::box_p(sub());
    case 6: { Formula a = sub(); return Formula::ob(a, sub()); }
    case 7: return Formula::ob_a(sub());
    default: return Formula::ob_p(sub());
  }
}

}  // namespace cjhol
