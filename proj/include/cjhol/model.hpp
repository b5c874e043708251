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

// Finite Carmo-Jones models <S, av, pv, ob, V>.
//
// Worlds are 0..n-1 with n <= kMaxWorlds, so a proposition is a small
// bitmask. ob is stored in trace-canonical form: for each context X the
// model keeps the set of nonempty traces W with W a subset of X, and
//
//   Y in ob(X)  iff  (Y & X) is a stored trace of X.
//
// Conditions 1 and 2 on ob therefore hold by construction for any
// canonical model; validate() audits canonicity and checks 3 to 5.

#ifndef CJHOL_MODEL_HPP_
#define CJHOL_MODEL_HPP_

#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cjhol {

inline constexpr int kMaxWorlds = 8;
inline constexpr int kMaxProps = 1 << kMaxWorlds;

// A set of worlds.
struct Prop {
  std::uint32_t bits = 0;

  static Prop world(int w) { return Prop{1u << w}; }
  static Prop full(int n) { return Prop{(1u << n) - 1u}; }

  bool empty() const { return bits == 0; }
  bool contains(int w) const { return (bits >> w) & 1u; }
  bool subset_of(Prop other) const { return (bits & ~other.bits) == 0; }
  int count() const { return __builtin_popcount(bits); }

  friend Prop operator&(Prop a, Prop b) { return Prop{a.bits & b.bits}; }
  friend Prop operator|(Prop a, Prop b) { return Prop{a.bits | b.bits}; }
  // Set difference.
  friend Prop operator-(Prop a, Prop b) { return Prop{a.bits & ~b.bits}; }
  friend bool operator==(Prop a, Prop b) = default;
  friend auto operator<=>(Prop a, Prop b) = default;
};

// Complement relative to the n worlds of a model.
inline Prop complement(Prop p, int n) { return Prop::full(n) - p; }

// "{0,2}"
std::string to_string(Prop p);

// A set of propositions, indexed by bitmask.
using PropSet = std::bitset<kMaxProps>;

struct CJModel {
  int n = 1;
  std::vector<Prop> av;
  std::vector<Prop> pv;
  // ob[X.bits] holds the canonical traces of context X.
  std::vector<PropSet> ob;
  std::map<std::string, Prop> val;

  // A one-world frame with av(0) = pv(0) = {0}, no obligations.
  static CJModel minimal(int n = 1);

  int num_props() const { return 1 << n; }
  Prop worlds() const { return Prop::full(n); }

  // Membership semantics: Y in ob(X).
  bool obligatory(Prop context, Prop member) const {
    return ob[context.bits].test((member & context).bits);
  }
  // Adds the trace of member to ob(context); empty traces are ignored.
  void add_obligation(Prop context, Prop member);
  std::vector<Prop> traces(Prop context) const;

  friend bool operator==(const CJModel&, const CJModel&) = default;
};

struct Violation {
  std::string condition;  // av-nonempty, pv1, pv2, ob1 .. ob5
  std::string detail;     // concrete witness
  std::string to_string() const { return condition + " " + detail; }
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view condition) const;
  std::string to_string() const;
};

// Thrown for malformed models: wrong array sizes, world indices >= n.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by load() when a structurally fine model violates the
// CJ conditions.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Throws ModelError if a bitset reaches past n or the arrays are mis-sized.
void check_structure(const CJModel& m);

ValidationReport validate(const CJModel& m);

// Binary-intersection closure of the traces of one context; the
// pairwise form of condition 3.
bool ob3_binary_closed(const PropSet& traces, Prop context);

using RawOb = std::map<Prop, std::vector<Prop>>;

struct Canonicalized {
  std::vector<PropSet> ob;
  std::vector<std::string> warnings;
};

// Replaces every member by its trace, drops empty traces with a warning.
Canonicalized canonicalize(const RawOb& raw, int n);

// Inverse view of canonicalize for serialization.
RawOb raw_ob(const CJModel& m);

struct Loaded {
  CJModel model;
  std::vector<std::string> warnings;
};

// JSON:
//   {"worlds": n, "av": [[...]...], "pv": [[...]...],
//    "ob": [{"context": [...], "members": [[...]...]}...],
//    "val": {"p": [...]}}
// Throws ModelError (with a JSON path) for malformed input and
// ValidationError for invalid models unless allow_invalid is set.
Loaded load(std::string_view json, bool allow_invalid = false);
Loaded load_file(const std::string& path, bool allow_invalid = false);
std::string save(const CJModel& m);

// A valid model built by sampling traces with probability `density`
// and repairing conditions 3 to 5 to a fixpoint. 1 <= n <= kMaxWorlds.
CJModel random_model(int n, const std::set<std::string>& atom_names, std::uint64_t seed,
                     double density);

// Closes ob under conditions 3, 4 and 5 by adding demanded traces.
void repair_ob(CJModel& m);

inline constexpr int kMaxEnumerationWorlds = 2;

// Every valid model on n <= 2 worlds with valuations over atom_names,
// each exactly once, in a fixed order. The visitor returns false to stop.
void enumerate_models(int n, const std::set<std::string>& atom_names,
                      const std::function<bool(const CJModel&)>& visit);
std::vector<CJModel> enumerate_models(int n, const std::set<std::string>& atom_names);

// Valid ob components on n <= 2 worlds, in enumeration order.
std::vector<std::vector<PropSet>> enumerate_obligations(int n);

}  // namespace cjhol

#endif  // CJHOL_MODEL_HPP_
