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

// Finite standard models of HOL and the bridge to CJ models.
//
// Domains: D_o = {F, T}, D_i = the n worlds, and D_(a>b) = every
// function from D_a to D_b. A function value is its full table, listed
// in the enumeration order of its argument domain, so equal functions
// have equal tables. Element k of D_(a>b) is the table whose j-th
// entry is element digit_j(k) of D_b, digits taken base |D_b|; for
// tau = i>o this makes element k the characteristic function of the
// world set with bitmask k.

#ifndef CJHOL_HENKIN_HPP_
#define CJHOL_HENKIN_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cjhol/embed.hpp"
#include "cjhol/formula.hpp"
#include "cjhol/hol.hpp"
#include "cjhol/model.hpp"

namespace cjhol {

struct World {
  int index = 0;
  friend bool operator==(World, World) = default;
};

class Value;

struct FnValue {
  HolType type;  // the arrow type of this function
  std::shared_ptr<const std::vector<Value>> table;
};

class Value {
 public:
  Value() : rep_(false) {}
  static Value boolean(bool b) { return Value(Rep(b)); }
  static Value world(int w) { return Value(Rep(World{w})); }
  static Value function(HolType type, std::vector<Value> table);

  bool is_bool() const { return std::holds_alternative<bool>(rep_); }
  bool is_world() const { return std::holds_alternative<World>(rep_); }
  bool is_function() const { return std::holds_alternative<FnValue>(rep_); }

  bool as_bool() const;
  int as_world() const;
  const FnValue& as_function() const;
  const std::vector<Value>& table() const { return *as_function().table; }

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  using Rep = std::variant<bool, World, FnValue>;
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

class DomainBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultDomainBudget = std::uint64_t{1} << 20;

class HenkinModel {
 public:
  explicit HenkinModel(int n, std::uint64_t budget = kDefaultDomainBudget);

  int worlds() const { return n_; }
  std::uint64_t budget() const { return budget_; }

  // |D_type|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> domain_size(const HolType& type) const;
  // |D_type|, throwing DomainBudgetError if it exceeds the budget.
  std::uint64_t enumerable_size(const HolType& type) const;

  // Element k of D_type, 0 <= k < |D_type|.
  Value element(const HolType& type, std::uint64_t k) const;
  // Inverse of element().
  std::uint64_t index_of(const Value& v, const HolType& type) const;

  // Characteristic function in D_tau of a world set, and back.
  Value prop(Prop p) const;
  Prop to_prop(const Value& v) const;

  void set_interp(const std::string& name, Value v) { interp_[name] = std::move(v); }
  const Value* interp(const std::string& name) const;
  const std::map<std::string, Value>& interpretations() const { return interp_; }

 private:
  int n_;
  std::uint64_t budget_;
  std::map<std::string, Value> interp_;
};

struct Assignment {
  // Values for de Bruijn binders; index 0 is the back.
  std::vector<Value> stack;
  std::map<std::string, Value> free;

  Assignment with(const std::string& name, Value v) const {
    Assignment g = *this;
    g.free[name] = std::move(v);
    return g;
  }
};

// The denotation of t in h under g. Throws DomainBudgetError when a
// quantifier or abstraction would enumerate a domain beyond the budget
// and EvalError for unassigned variables or uninterpreted constants.
Value eval_term(const HenkinModel& h, Assignment& g, const HolTerm& t);
Value eval_term(const HenkinModel& h, const HolTerm& t);
// Convenience for closed formulas (type o).
bool holds(const HenkinModel& h, const HolTerm& t);

// The standard model H^M: D_i = worlds of m, every atom and av, pv, ob
// interpreted as characteristic functions (av X Y iff Y in av(X)).
HenkinModel build_henkin(const CJModel& m);

// Names of the axioms() that are false in h, in axiom order.
std::vector<std::string> failing_axioms(const HenkinModel& h);

class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(std::string axiom, const std::string& msg)
      : std::runtime_error(msg), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

// Reads a CJ model back out of a standard model satisfying axioms().
// Throws ExtractionError naming the first false axiom.
CJModel extract_model(const HenkinModel& h, const std::set<std::string>& atom_names);

// The interpreted av, pv and ob of h, checked directly against the CJ
// frame conditions (av), (pv1), (pv2), (ob1) .. (ob5). Returns the names
// of the failing clauses. ob3 is checked over every nonempty family.
std::vector<std::string> interpreted_frame_failures(const HenkinModel& h);

// ---------------------------------------------------------------------------
// Direct vs. embedded evaluation.

struct FaithfulnessOptions {
  int min_worlds = 1;
  int max_worlds = 2;
  int samples = 1000;
  std::uint64_t seed = 0;
  int max_depth = 6;
  int max_atoms = 3;
};

struct Mismatch {
  CJModel model;
  int world = 0;
  Formula formula;
  std::string kind;  // "world" or "validity"
};

struct FaithfulnessReport {
  int samples = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  // One MISMATCH line per mismatch, then OK samples=<n> or
  // FAIL samples=<n> mismatches=<k>.
  std::string to_string() const;
};

// For each sample draws a model, a formula and a world, and compares
// eval(m, s, f) against the embedded term (embed(f) S) under S := s,
// and valid_in_model(m, f) against vld(embed(f)), both in build_henkin(m).
FaithfulnessReport check_faithfulness(const FaithfulnessOptions& options);
FaithfulnessReport check_faithfulness(int n_max, int samples, std::uint64_t seed);

}  // namespace cjhol

#endif  // CJHOL_HENKIN_HPP_
