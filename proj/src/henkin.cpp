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

#include "cjhol/henkin.hpp"

#include <algorithm>

#include "cjhol/checker.hpp"
#include "cjhol/rng.hpp"

namespace cjhol {

// ---------------------------------------------------------------------------
// Values

Value Value::function(HolType type, std::vector<Value> table) {
  return Value(Rep(FnValue{std::move(type), std::make_shared<const std::vector<Value>>(std::move(table))}));
}

bool Value::as_bool() const {
  if (const bool* b = std::get_if<bool>(&rep_)) return *b;
  throw EvalError("value is not a truth value");
}

int Value::as_world() const {
  if (const World* w = std::get_if<World>(&rep_)) return w->index;
  throw EvalError("value is not a world");
}

const FnValue& Value::as_function() const {
  if (const FnValue* f = std::get_if<FnValue>(&rep_)) return *f;
  throw EvalError("value is not a function");
}

bool operator==(const Value& a, const Value& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (a.is_bool()) return a.as_bool() == b.as_bool();
  if (a.is_world()) return a.as_world() == b.as_world();
  const auto& ta = a.as_function().table;
  const auto& tb = b.as_function().table;
  return ta == tb || *ta == *tb;
}

namespace {

HolType type_of_value(const Value& v) {
  if (v.is_bool()) return HolType::o();
  if (v.is_world()) return HolType::i();
  return v.as_function().type;
}

std::string size_text(std::optional<std::uint64_t> size) {
  return size ? std::to_string(*size) : std::string("more than 2^64");
}

}  // namespace

// ---------------------------------------------------------------------------
// Models

HenkinModel::HenkinModel(int n, std::uint64_t budget) : n_(n), budget_(budget) {
  if (n < 1) throw std::invalid_argument("a standard model needs at least one world");
}

std::optional<std::uint64_t> HenkinModel::domain_size(const HolType& type) const {
  switch (type.kind()) {
    case HolType::Kind::kBool: return 2;
    case HolType::Kind::kInd: return static_cast<std::uint64_t>(n_);
    case HolType::Kind::kArrow: {
      const auto base = domain_size(type.codomain());
      const auto exponent = domain_size(type.domain());
      if (!base || !exponent) return std::nullopt;
      std::uint64_t out = 1;
      for (std::uint64_t k = 0; k < *exponent; ++k) {
        if (*base != 0 && out > UINT64_MAX / *base) return std::nullopt;
        out *= *base;
      }
      return out;
    }
  }
  return std::nullopt;
}

std::uint64_t HenkinModel::enumerable_size(const HolType& type) const {
  const auto size = domain_size(type);
  if (!size || *size > budget_) {
    throw DomainBudgetError("domain of type " + type.to_string() + " has " + size_text(size) +
                            " elements, over the budget of " + std::to_string(budget_));
  }
  return *size;
}

Value HenkinModel::element(const HolType& type, std::uint64_t k) const {
  switch (type.kind()) {
    case HolType::Kind::kBool: return Value::boolean(k == 1);
    case HolType::Kind::kInd: return Value::world(static_cast<int>(k));
    case HolType::Kind::kArrow: break;
  }
  const std::uint64_t rows = enumerable_size(type.domain());
  const std::uint64_t base = *domain_size(type.codomain());
  std::vector<Value> table;
  table.reserve(rows);
  for (std::uint64_t j = 0; j < rows; ++j) {
    table.push_back(element(type.codomain(), k % base));
    k /= base;
  }
  return Value::function(type, std::move(table));
}

std::uint64_t HenkinModel::index_of(const Value& v, const HolType& type) const {
  switch (type.kind()) {
    case HolType::Kind::kBool: return v.as_bool() ? 1 : 0;
    case HolType::Kind::kInd: return static_cast<std::uint64_t>(v.as_world());
    case HolType::Kind::kArrow: break;
  }
  enumerable_size(type);
  const std::uint64_t base = *domain_size(type.codomain());
  const auto& table = v.table();
  std::uint64_t out = 0;
  for (std::size_t j = table.size(); j-- > 0;) out = out * base + index_of(table[j], type.codomain());
  return out;
}

Value HenkinModel::prop(Prop p) const { return element(HolType::tau(), p.bits); }

Prop HenkinModel::to_prop(const Value& v) const {
  return Prop{static_cast<std::uint32_t>(index_of(v, HolType::tau()))};
}

const Value* HenkinModel::interp(const std::string& name) const {
  auto it = interp_.find(name);
  return it == interp_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const HenkinModel& h, Assignment& g) : h_(h), g_(g) {}

  Value eval(const HolTerm& t) {
    std::vector<const HolTerm*> args;
    const HolTerm* head = &t;
    while (head->is_app()) {
      args.push_back(&head->arg());
      head = &head->fun();
    }
    std::reverse(args.begin(), args.end());

    if (head->is_const() && is_logical_constant(*head)) {
      if (auto v = logical(*head, args)) return *v;
    }
    if (head->is_abs() && args.empty()) return tabulate(*head);

    std::vector<Value> vals;
    vals.reserve(args.size());
    for (const HolTerm* a : args) vals.push_back(eval(*a));

    std::size_t used = 0;
    Value fun;
    if (head->is_abs()) {
      // A beta-redex: bind the arguments instead of tabulating.
      const HolTerm* body = head;
      while (body->is_abs() && used < vals.size()) {
        g_.stack.push_back(vals[used++]);
        body = &body->body();
      }
      fun = eval(*body);
      g_.stack.resize(g_.stack.size() - used);
    } else {
      fun = atom(*head);
    }
    for (std::size_t k = used; k < vals.size(); ++k) fun = apply(fun, vals[k]);
    return fun;
  }

 private:
  Value apply(const Value& fun, const Value& arg) {
    const FnValue& f = fun.as_function();
    const std::uint64_t idx = h_.index_of(arg, f.type.domain());
    return (*f.table)[idx];
  }

  Value atom(const HolTerm& t) {
    switch (t.kind()) {
      case HolTerm::Kind::kConst: {
        if (is_logical_constant(t)) return materialize(t, {});
        if (const Value* v = h_.interp(t.name())) return *v;
        throw EvalError("constant '" + t.name() + "' has no interpretation");
      }
      case HolTerm::Kind::kFree: {
        auto it = g_.free.find(t.name());
        if (it == g_.free.end()) throw EvalError("free variable '" + t.name() + "' is unassigned");
        return it->second;
      }
      case HolTerm::Kind::kBound:
        if (t.index() >= g_.stack.size()) throw EvalError("dangling bound index " + std::to_string(t.index()));
        return g_.stack[g_.stack.size() - 1 - t.index()];
      default:
        return eval(t);
    }
  }

  // The function denoted by an abstraction: one row per element of
  // the binder's domain.
  Value tabulate(const HolTerm& abs) {
    const HolType& binder = abs.type();
    const std::uint64_t rows = h_.enumerable_size(binder);
    std::vector<Value> table;
    table.reserve(rows);
    for (std::uint64_t k = 0; k < rows; ++k) {
      g_.stack.push_back(h_.element(binder, k));
      table.push_back(eval(abs.body()));
      g_.stack.pop_back();
    }
    HolType type = HolType::arrow(binder, type_of_value(table.front()));
    return Value::function(std::move(type), std::move(table));
  }

  // Fully applied logical constants, evaluated with short-circuiting.
  std::optional<Value> logical(const HolTerm& c, const std::vector<const HolTerm*>& args) {
    const std::string& name = c.name();
    if (name == kNotName && args.size() == 1) return Value::boolean(!eval(*args[0]).as_bool());
    if (name == kOrName && args.size() == 2) {
      return Value::boolean(eval(*args[0]).as_bool() || eval(*args[1]).as_bool());
    }
    if (name == kEqName && args.size() == 2) return Value::boolean(eval(*args[0]) == eval(*args[1]));
    if (name == kPiName && args.size() == 1) {
      const HolType& over = c.type().domain().domain();
      const std::uint64_t size = h_.enumerable_size(over);
      const HolTerm& pred = *args[0];
      if (pred.is_abs()) {
        for (std::uint64_t k = 0; k < size; ++k) {
          g_.stack.push_back(h_.element(over, k));
          const bool ok = eval(pred.body()).as_bool();
          g_.stack.pop_back();
          if (!ok) return Value::boolean(false);
        }
        return Value::boolean(true);
      }
      const Value f = eval(pred);
      for (const Value& row : f.table())
        if (!row.as_bool()) return Value::boolean(false);
      return Value::boolean(true);
    }
    return std::nullopt;
  }

  // A partially applied logical constant as a table.
  Value materialize(const HolTerm& c, std::vector<Value> given) {
    HolType rest = c.type();
    for (std::size_t k = 0; k < given.size(); ++k) rest = rest.codomain();
    if (!rest.is_arrow()) return logical_value(c, given);
    const std::uint64_t rows = h_.enumerable_size(rest.domain());
    std::vector<Value> table;
    table.reserve(rows);
    for (std::uint64_t k = 0; k < rows; ++k) {
      given.push_back(h_.element(rest.domain(), k));
      table.push_back(materialize(c, given));
      given.pop_back();
    }
    return Value::function(rest, std::move(table));
  }

  static Value logical_value(const HolTerm& c, const std::vector<Value>& v) {
    const std::string& name = c.name();
    if (name == kNotName) return Value::boolean(!v[0].as_bool());
    if (name == kOrName) return Value::boolean(v[0].as_bool() || v[1].as_bool());
    if (name == kEqName) return Value::boolean(v[0] == v[1]);
    for (const Value& row : v[0].table())
      if (!row.as_bool()) return Value::boolean(false);
    return Value::boolean(true);
  }

  const HenkinModel& h_;
  Assignment& g_;
};

}  // namespace

Value eval_term(const HenkinModel& h, Assignment& g, const HolTerm& t) { return Evaluator(h, g).eval(t); }

Value eval_term(const HenkinModel& h, const HolTerm& t) {
  Assignment g;
  return eval_term(h, g, t);
}

bool holds(const HenkinModel& h, const HolTerm& t) { return eval_term(h, t).as_bool(); }

// ---------------------------------------------------------------------------
// H^M and its inverse

HenkinModel build_henkin(const CJModel& m) {
  HenkinModel h(m.n);
  for (const auto& [name, p] : m.val) h.set_interp(name, h.prop(p));
  const HolType rel = av_const().type();
  std::vector<Value> av, pv;
  for (int s = 0; s < m.n; ++s) {
    av.push_back(h.prop(m.av[s]));
    pv.push_back(h.prop(m.pv[s]));
  }
  h.set_interp(kAvName, Value::function(rel, std::move(av)));
  h.set_interp(kPvName, Value::function(rel, std::move(pv)));

  const HolType row_type = HolType::arrow(HolType::tau(), HolType::o());
  std::vector<Value> ob;
  for (int x = 0; x < m.num_props(); ++x) {
    std::vector<Value> row;
    for (int y = 0; y < m.num_props(); ++y)
      row.push_back(Value::boolean(m.obligatory(Prop{static_cast<std::uint32_t>(x)}, Prop{static_cast<std::uint32_t>(y)})));
    ob.push_back(Value::function(row_type, std::move(row)));
  }
  h.set_interp(kObName, Value::function(ob_const().type(), std::move(ob)));
  return h;
}

std::vector<std::string> failing_axioms(const HenkinModel& h) {
  std::vector<std::string> out;
  for (const auto& ax : axioms())
    if (!holds(h, ax.term)) out.push_back(ax.name);
  return out;
}

namespace {

struct Interpreted {
  int n = 0;
  std::vector<Prop> av, pv;
  std::vector<std::vector<bool>> ob;  // ob[X][Y]: Iob(X, Y)
};

Interpreted read_frame(const HenkinModel& h) {
  Interpreted out;
  out.n = h.worlds();
  const Value* av = h.interp(kAvName);
  const Value* pv = h.interp(kPvName);
  const Value* ob = h.interp(kObName);
  if (!av || !pv || !ob) throw std::invalid_argument("model does not interpret av, pv and ob");
  for (int s = 0; s < out.n; ++s) {
    out.av.push_back(h.to_prop(av->table()[s]));
    out.pv.push_back(h.to_prop(pv->table()[s]));
  }
  const int props = 1 << out.n;
  out.ob.assign(props, std::vector<bool>(props, false));
  for (int x = 0; x < props; ++x)
    for (int y = 0; y < props; ++y) out.ob[x][y] = ob->table()[x].table()[y].as_bool();
  return out;
}

}  // namespace

CJModel extract_model(const HenkinModel& h, const std::set<std::string>& atom_names) {
  if (h.worlds() > kMaxWorlds) throw std::invalid_argument("too many worlds for a CJ model");
  for (const auto& ax : axioms()) {
    if (!holds(h, ax.term)) throw ExtractionError(ax.name, "axiom " + ax.name + " is false in the model");
  }
  const Interpreted frame = read_frame(h);
  CJModel m = CJModel::minimal(frame.n);
  m.av = frame.av;
  m.pv = frame.pv;
  for (int x = 0; x < m.num_props(); ++x) {
    for (int y = 0; y < m.num_props(); ++y) {
      if (frame.ob[x][y]) m.add_obligation(Prop{static_cast<std::uint32_t>(x)}, Prop{static_cast<std::uint32_t>(y)});
    }
  }
  for (const auto& name : atom_names) {
    const Value* v = h.interp(name);
    if (!v) throw std::invalid_argument("atom '" + name + "' has no interpretation");
    m.val[name] = h.to_prop(*v);
  }
  return m;
}

std::vector<std::string> interpreted_frame_failures(const HenkinModel& h) {
  const Interpreted f = read_frame(h);
  const auto props = static_cast<std::uint32_t>(1u << f.n);
  auto ob = [&](std::uint32_t x, std::uint32_t y) { return static_cast<bool>(f.ob[x][y]); };
  std::vector<std::string> out;

  bool av_ok = true, pv1_ok = true, pv2_ok = true;
  for (int s = 0; s < f.n; ++s) {
    av_ok = av_ok && !f.av[s].empty();
    pv1_ok = pv1_ok && f.av[s].subset_of(f.pv[s]);
    pv2_ok = pv2_ok && f.pv[s].contains(s);
  }
  if (!av_ok) out.push_back("av");
  if (!pv1_ok) out.push_back("pv1");
  if (!pv2_ok) out.push_back("pv2");

  bool ob1 = true, ob2 = true, ob3 = true, ob4 = true, ob5 = true;
  for (std::uint32_t x = 0; x < props; ++x) {
    ob1 = ob1 && !ob(x, 0);
    for (std::uint32_t y = 0; y < props; ++y)
      for (std::uint32_t z = 0; z < props; ++z)
        if ((y & x) == (z & x) && ob(x, y) != ob(x, z)) ob2 = false;

    // Every intersection of a nonempty subfamily of ob(X), by saturation.
    std::vector<bool> meets(props, false);
    for (std::uint32_t y = 0; y < props; ++y) meets[y] = ob(x, y);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::uint32_t a = 0; a < props; ++a)
        for (std::uint32_t b = 0; b < props; ++b)
          if (meets[a] && meets[b] && !meets[a & b]) meets[a & b] = grew = true;
    }
    for (std::uint32_t c = 0; c < props; ++c)
      if (meets[c] && (c & x) != 0 && !ob(x, c)) ob3 = false;

    for (std::uint32_t y = 0; y < props; ++y) {
      for (std::uint32_t z = 0; z < props; ++z) {
        const bool y_in_x = (y & ~x) == 0;
        if (y_in_x && ob(x, y) && (x & ~z) == 0 && !ob(z, (z & ~x) | y)) ob4 = false;
        if (y_in_x && ob(x, z) && (y & z) != 0 && !ob(y, z)) ob5 = false;
      }
    }
  }
  if (!ob1) out.push_back("ob1");
  if (!ob2) out.push_back("ob2");
  if (!ob3) out.push_back("ob3");
  if (!ob4) out.push_back("ob4");
  if (!ob5) out.push_back("ob5");
  return out;
}

}  // namespace cjhol
