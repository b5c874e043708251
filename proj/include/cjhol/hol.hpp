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

// Church-typed simply-typed lambda terms over base types o and i.
//
// Bound variables are de Bruijn indices, so alpha-equivalent terms are
// structurally equal; binder names survive only as display hints.
// Terms are immutable and structurally shared.

#ifndef CJHOL_HOL_HPP_
#define CJHOL_HOL_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cjhol {

class HolType {
 public:
  enum class Kind : std::uint8_t { kBool, kInd, kArrow };

  static HolType o();
  static HolType i();
  static HolType arrow(HolType from, HolType to);
  // i -> o, the type of embedded CJ formulas.
  static HolType tau();

  Kind kind() const { return node_->kind; }
  bool is_arrow() const { return kind() == Kind::kArrow; }
  const HolType& domain() const;
  const HolType& codomain() const;

  // Right-associated arrows print without parentheses: "(i>o)>i>o".
  std::string to_string() const;

  friend bool operator==(const HolType& a, const HolType& b);
  friend bool operator!=(const HolType& a, const HolType& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const HolType> from;
    std::shared_ptr<const HolType> to;
  };
  explicit HolType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HolTerm {
 public:
  enum class Kind : std::uint8_t { kConst, kBound, kFree, kApp, kAbs };

  static HolTerm constant(std::string name, HolType type);
  static HolTerm bound(std::uint32_t index);
  static HolTerm free(std::string name, HolType type);
  static HolTerm app(HolTerm fun, HolTerm arg);
  static HolTerm abs(HolType binder, HolTerm body, std::string display = "X");

  Kind kind() const { return node_->kind; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_abs() const { return kind() == Kind::kAbs; }
  bool is_bound() const { return kind() == Kind::kBound; }
  bool is_free() const { return kind() == Kind::kFree; }

  // Constant or free-variable name; binder display name for abstractions.
  const std::string& name() const { return node_->name; }
  // Declared type of a constant or free variable; binder type of an abstraction.
  const HolType& type() const { return *node_->type; }
  std::uint32_t index() const { return node_->index; }
  const HolTerm& fun() const { return *node_->left; }
  const HolTerm& arg() const { return *node_->right; }
  const HolTerm& body() const { return *node_->left; }

  std::size_t size() const;

  bool is_const(const std::string& name) const { return is_const() && node_->name == name; }

  // Alpha-equivalence (display names are ignored).
  friend bool operator==(const HolTerm& a, const HolTerm& b);
  friend bool operator!=(const HolTerm& a, const HolTerm& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const HolType> type;
    std::uint32_t index = 0;
    std::shared_ptr<const HolTerm> left;
    std::shared_ptr<const HolTerm> right;
  };
  explicit HolTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Typing, shifting and substitution.

// Throws TypeError on ill-typed applications and dangling indices.
HolType type_of(const HolTerm& t);
// Types t under binder types `context` (innermost binder last).
HolType type_of(const HolTerm& t, std::vector<HolType>& context);

// Adds `delta` to every bound index >= cutoff.
HolTerm shift(const HolTerm& t, int delta, std::uint32_t cutoff = 0);
bool has_loose_bound(const HolTerm& t, std::uint32_t index);

// [replacement / 0] body, lowering the remaining loose indices by one.
// This is the contraction step of a beta-redex (\X. body) replacement.
HolTerm substitute(const HolTerm& body, const HolTerm& replacement);
// Same, for an abstraction; checks the binder type against the
// replacement's type.
HolTerm instantiate(const HolTerm& abstraction, const HolTerm& replacement);

// ---------------------------------------------------------------------------
// Normalization.

enum class Strategy {
  kNormalOrder,  // leftmost-outermost redex first
  kInnermost,    // arguments and operators normalized before contracting
};

HolTerm beta_normalize(const HolTerm& t, Strategy strategy = Strategy::kNormalOrder);
HolTerm eta_normalize(const HolTerm& t);
HolTerm beta_eta_normalize(const HolTerm& t, Strategy strategy = Strategy::kNormalOrder);

bool has_beta_redex(const HolTerm& t);
bool has_eta_redex(const HolTerm& t);

// ---------------------------------------------------------------------------
// Construction helpers. Terms are built with named free variables and
// closed with lambda(), which turns Free(name, type) into a bound index.

HolTerm var(const std::string& name, const HolType& type);
HolTerm lambda(const std::string& name, const HolType& type, const HolTerm& body);
HolTerm apply(const HolTerm& fun, std::initializer_list<HolTerm> args);

// Names of the primitive logical constants.
inline const std::string kNotName = "~";
inline const std::string kOrName = "|";
inline const std::string kPiName = "Pi";
inline const std::string kEqName = "=";

HolTerm not_const();
HolTerm or_const();
HolTerm pi_const(const HolType& over);
HolTerm eq_const(const HolType& over);
bool is_logical_constant(const HolTerm& t);

HolTerm neg(const HolTerm& a);
HolTerm disj(const HolTerm& a, const HolTerm& b);
HolTerm conj(const HolTerm& a, const HolTerm& b);
HolTerm implies(const HolTerm& a, const HolTerm& b);
HolTerm iff(const HolTerm& a, const HolTerm& b);
HolTerm forall(const std::string& name, const HolType& type, const HolTerm& body);
HolTerm exists(const std::string& name, const HolType& type, const HolTerm& body);
// Primitive equality; the operand type is inferred from a.
HolTerm eq(const HolTerm& a, const HolTerm& b);
// (\X:i. X) = (\X:i. X)
HolTerm top();
HolTerm bottom();
// Forall P:(a>o). ~(P a) | P b. Throws TypeError if the types differ.
HolTerm leibniz_eq(const HolTerm& a, const HolTerm& b);

// Constant names occurring in t.
std::set<std::string> constants_of(const HolTerm& t);

// Readable named form: "!S:i. (~(p S) | p S)", "^A:i>o. ...".
std::string to_string(const HolTerm& t);

}  // namespace cjhol

#endif  // CJHOL_HOL_HPP_
