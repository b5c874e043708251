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

// Formulas of the Carmo-Jones dyadic deontic logic.
//
// The stored AST has exactly nine constructors. Derived connectives
// (&, ->, <->, the diamonds, T and F) are eliminated by the parser, so
// every consumer only needs the primitive clauses.

#ifndef CJHOL_FORMULA_HPP_
#define CJHOL_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cjhol {

enum class Op : std::uint8_t {
  kAtom,
  kNot,
  kOr,
  kBox,       // in all worlds
  kBoxA,      // in all actual versions
  kBoxP,      // in all potential versions
  kObDyadic,  // O(consequent / antecedent)
  kObA,       // actual obligation
  kObP,       // primary obligation
};

// Immutable, structurally shared formula tree. Copies are cheap.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula neg(Formula f);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula box(Formula f);
  static Formula box_a(Formula f);
  static Formula box_p(Formula f);
  static Formula ob(Formula antecedent, Formula consequent);
  static Formula ob_a(Formula f);
  static Formula ob_p(Formula f);

  // Derived connectives, expanded into primitives.
  static Formula conj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula diamond(Formula f);
  static Formula diamond_a(Formula f);
  static Formula diamond_p(Formula f);
  static Formula top();
  static Formula bottom();

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }

  // Unary operand, or the left disjunct.
  const Formula& child() const { return *node_->lhs; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }
  // For kObDyadic: O(consequent / antecedent).
  const Formula& antecedent() const { return *node_->lhs; }
  const Formula& consequent() const { return *node_->rhs; }

  bool is_unary() const;
  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Op op;
    std::string name;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, const Formula* lhs, const Formula* rhs);

  std::shared_ptr<const Node> node_;
};

// The atom used to desugar T as ~q0 | q0.
inline constexpr std::string_view kReservedAtom = "q0";

bool is_identifier(std::string_view s);

// Identifiers the higher-order signature already uses for av, pv and ob.
bool is_signature_name(std::string_view s);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg);

  // Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }
  // Tokens that would have been accepted at offset(); empty for
  // errors that are not about the next token (e.g. reserved atoms).
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Concrete syntax, lowest to highest binding:
//   <->  (left)     ->  (right)     |  (left)     &  (left)
//   prefix: ~ [] [a] [p] <> <a> <p> Oa Op
//   atoms: [a-z][a-zA-Z0-9_]*, constants T and F, O(psi / phi), ( ... )
Formula parse(std::string_view text);

// Prints only primitive constructors; parse(pretty(f)) == f.
std::string pretty(const Formula& f);

std::set<std::string> atoms(const Formula& f);

// Uniformly picks a constructor at every level above max_depth == 0.
Formula random_formula(std::mt19937_64& rng, int max_depth,
                       const std::vector<std::string>& atom_names);

}  // namespace cjhol

#endif  // CJHOL_FORMULA_HPP_
