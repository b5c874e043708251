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

#include "cjhol/model.hpp"

#include <sstream>

#include "cjhol/rng.hpp"

namespace cjhol {

std::string to_string(Prop p) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; w < 32; ++w) {
    if (!p.contains(w)) continue;
    if (!first) out += ',';
    out += std::to_string(w);
    first = false;
  }
  return out + "}";
}

CJModel CJModel::minimal(int n) {
  if (n < 1 || n > kMaxWorlds) throw std::invalid_argument("world count out of range");
  CJModel m;
  m.n = n;
  for (int s = 0; s < n; ++s) {
    m.av.push_back(Prop::world(s));
    m.pv.push_back(Prop::world(s));
  }
  m.ob.assign(m.num_props(), PropSet{});
  return m;
}

void CJModel::add_obligation(Prop context, Prop member) {
  const Prop trace = member & context;
  if (!trace.empty()) ob[context.bits].set(trace.bits);
}

std::vector<Prop> CJModel::traces(Prop context) const {
  std::vector<Prop> out;
  for (std::uint32_t t = 1; t < static_cast<std::uint32_t>(num_props()); ++t) {
    if (ob[context.bits].test(t) && Prop{t}.subset_of(context)) out.push_back(Prop{t});
  }
  return out;
}

bool ValidationReport::has(std::string_view condition) const {
  for (const auto& v : violations)
    if (v.condition == condition) return true;
  return false;
}

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "valid\n";
  std::string out;
  for (const auto& v : violations) out += v.to_string() + "\n";
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid CJ model: " + (report.violations.empty()
                                                     ? std::string("?")
                                                     : report.violations.front().to_string())),
      report_(std::move(report)) {}

void check_structure(const CJModel& m) {
  if (m.n < 1 || m.n > kMaxWorlds)
    throw ModelError("world count " + std::to_string(m.n) + " outside 1.." +
                     std::to_string(kMaxWorlds));
  const auto n = static_cast<std::size_t>(m.n);
  if (m.av.size() != n) throw ModelError("av has " + std::to_string(m.av.size()) + " entries, expected " + std::to_string(n));
  if (m.pv.size() != n) throw ModelError("pv has " + std::to_string(m.pv.size()) + " entries, expected " + std::to_string(n));
  if (m.ob.size() != static_cast<std::size_t>(m.num_props()))
    throw ModelError("ob has " + std::to_string(m.ob.size()) + " contexts, expected " + std::to_string(m.num_props()));
  const Prop all = m.worlds();
  for (std::size_t s = 0; s < n; ++s) {
    if (!m.av[s].subset_of(all)) throw ModelError("av(" + std::to_string(s) + ") mentions a world >= n");
    if (!m.pv[s].subset_of(all)) throw ModelError("pv(" + std::to_string(s) + ") mentions a world >= n");
  }
  for (std::size_t x = 0; x < m.ob.size(); ++x) {
    for (std::size_t t = m.num_props(); t < kMaxProps; ++t) {
      if (m.ob[x].test(t)) throw ModelError("ob trace " + std::to_string(t) + " mentions a world >= n");
    }
  }
  for (const auto& [name, p] : m.val) {
    if (!p.subset_of(all)) throw ModelError("val(" + name + ") mentions a world >= n");
  }
}

bool ob3_binary_closed(const PropSet& traces, Prop context) {
  for (std::uint32_t a = 1; a < kMaxProps; ++a) {
    if (!traces.test(a) || !Prop{a}.subset_of(context)) continue;
    for (std::uint32_t b = a + 1; b < kMaxProps; ++b) {
      if (!traces.test(b) || !Prop{b}.subset_of(context)) continue;
      const std::uint32_t c = a & b;
      if (c != 0 && !traces.test(c)) return false;
    }
  }
  return true;
}

namespace {

std::string triple(Prop x, Prop y, Prop z) {
  return "X=" + to_string(x) + " Y=" + to_string(y) + " Z=" + to_string(z);
}

void check_frame(const CJModel& m, ValidationReport& r) {
  for (int s = 0; s < m.n; ++s) {
    const std::string where = "world " + std::to_string(s);
    if (m.av[s].empty()) r.violations.push_back({"av-nonempty", where});
    if (!m.av[s].subset_of(m.pv[s]))
      r.violations.push_back({"pv1", where + ": av=" + to_string(m.av[s]) + " not within pv=" + to_string(m.pv[s])});
    if (!m.pv[s].contains(s)) r.violations.push_back({"pv2", where + ": not in pv=" + to_string(m.pv[s])});
  }
}

void check_canonical(const CJModel& m, ValidationReport& r) {
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(m.num_props()); ++x) {
    if (m.ob[x].test(0)) r.violations.push_back({"ob1", "context " + to_string(Prop{x}) + ": empty set is obligatory"});
    for (std::uint32_t t = 1; t < static_cast<std::uint32_t>(m.num_props()); ++t) {
      if (m.ob[x].test(t) && !Prop{t}.subset_of(Prop{x})) {
        r.violations.push_back({"ob2", "context " + to_string(Prop{x}) + ": non-canonical trace " +
                                           to_string(Prop{t}) + " (not a subset of the context)"});
      }
    }
  }
}

void check_ob3(const CJModel& m, ValidationReport& r) {
  for (std::uint32_t x = 1; x < static_cast<std::uint32_t>(m.num_props()); ++x) {
    const std::vector<Prop> ts = m.traces(Prop{x});
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        const Prop meet = ts[i] & ts[j];
        if (!meet.empty() && !m.obligatory(Prop{x}, meet)) {
          r.violations.push_back({"ob3", "context " + to_string(Prop{x}) + ": " + to_string(ts[i]) + " & " +
                                             to_string(ts[j]) + " = " + to_string(meet) + " not obligatory"});
          return;
        }
      }
    }
  }
}

void check_ob4(const CJModel& m, ValidationReport& r) {
  const auto props = static_cast<std::uint32_t>(m.num_props());
  for (std::uint32_t x = 0; x < props; ++x) {
    for (std::uint32_t y = 0; y < props; ++y) {
      if (!Prop{y}.subset_of(Prop{x}) || !m.obligatory(Prop{x}, Prop{y})) continue;
      for (std::uint32_t z = 0; z < props; ++z) {
        if (!Prop{x}.subset_of(Prop{z})) continue;
        const Prop demanded = (Prop{z} - Prop{x}) | Prop{y};
        if (!m.obligatory(Prop{z}, demanded)) {
          r.violations.push_back({"ob4", triple(Prop{x}, Prop{y}, Prop{z}) + ": (Z\\X)|Y = " +
                                             to_string(demanded) + " not in ob(Z)"});
          return;
        }
      }
    }
  }
}

void check_ob5(const CJModel& m, ValidationReport& r) {
  const auto props = static_cast<std::uint32_t>(m.num_props());
  for (std::uint32_t x = 0; x < props; ++x) {
    for (std::uint32_t z = 0; z < props; ++z) {
      if (!m.obligatory(Prop{x}, Prop{z})) continue;
      for (std::uint32_t y = 0; y < props; ++y) {
        if (!Prop{y}.subset_of(Prop{x}) || (Prop{y} & Prop{z}).empty()) continue;
        if (!m.obligatory(Prop{y}, Prop{z})) {
          r.violations.push_back({"ob5", triple(Prop{x}, Prop{y}, Prop{z}) + ": Z not in ob(Y)"});
          return;
        }
      }
    }
  }
}

}  // namespace

ValidationReport validate(const CJModel& m) {
  check_structure(m);
  ValidationReport r;
  check_frame(m, r);
  check_canonical(m, r);
  check_ob3(m, r);
  check_ob4(m, r);
  check_ob5(m, r);
  return r;
}

Canonicalized canonicalize(const RawOb& raw, int n) {
  if (n < 1 || n > kMaxWorlds) throw ModelError("world count out of range");
  Canonicalized out;
  out.ob.assign(std::size_t{1} << n, PropSet{});
  const Prop all = Prop::full(n);
  for (const auto& [context, members] : raw) {
    if (!context.subset_of(all)) throw ModelError("ob context " + to_string(context) + " mentions a world >= n");
    for (Prop member : members) {
      if (!member.subset_of(all)) throw ModelError("ob member " + to_string(member) + " mentions a world >= n");
      const Prop trace = member & context;
      if (trace.empty()) {
        out.warnings.push_back("empty trace dropped: member " + to_string(member) + " of context " +
                               to_string(context));
        continue;
      }
      if (trace != member) {
        out.warnings.push_back("member " + to_string(member) + " of context " + to_string(context) +
                               " replaced by its trace " + to_string(trace));
      }
      out.ob[context.bits].set(trace.bits);
    }
  }
  return out;
}

RawOb raw_ob(const CJModel& m) {
  RawOb out;
  for (std::uint32_t x = 1; x < static_cast<std::uint32_t>(m.num_props()); ++x) {
    std::vector<Prop> ts = m.traces(Prop{x});
    if (!ts.empty()) out.emplace(Prop{x}, std::move(ts));
  }
  return out;
}

void repair_ob(CJModel& m) {
  const auto props = static_cast<std::uint32_t>(m.num_props());
  bool changed = true;
  while (changed) {
    changed = false;
    // ob3: pairwise intersections within each context, to closure.
    for (std::uint32_t x = 1; x < props; ++x) {
      bool grew = true;
      while (grew) {
        grew = false;
        const std::vector<Prop> ts = m.traces(Prop{x});
        for (std::size_t i = 0; i < ts.size(); ++i) {
          for (std::size_t j = i + 1; j < ts.size(); ++j) {
            const Prop meet = ts[i] & ts[j];
            if (!meet.empty() && !m.ob[x].test(meet.bits)) {
              m.ob[x].set(meet.bits);
              grew = changed = true;
            }
          }
        }
      }
    }
    // ob4: a trace Y of X lifts to (Z\X)|Y in every superset Z.
    for (std::uint32_t x = 1; x < props; ++x) {
      for (Prop y : m.traces(Prop{x})) {
        for (std::uint32_t z = x; z < props; ++z) {
          if (!Prop{x}.subset_of(Prop{z})) continue;
          const Prop lifted = (Prop{z} - Prop{x}) | y;
          if (!m.ob[z].test(lifted.bits)) {
            m.ob[z].set(lifted.bits);
            changed = true;
          }
        }
      }
    }
    // ob5: a trace T of X restricts to T&Y in every subset Y meeting it.
    for (std::uint32_t x = 1; x < props; ++x) {
      for (Prop t : m.traces(Prop{x})) {
        for (std::uint32_t y = 1; y <= x; ++y) {
          if (!Prop{y}.subset_of(Prop{x})) continue;
          const Prop restricted = t & Prop{y};
          if (!restricted.empty() && !m.ob[y].test(restricted.bits)) {
            m.ob[y].set(restricted.bits);
            changed = true;
          }
        }
      }
    }
  }
}

CJModel random_model(int n, const std::set<std::string>& atom_names, std::uint64_t seed,
                     double density) {
  if (n < 1 || n > kMaxWorlds)
    throw std::invalid_argument("random_model: world count must be in 1.." + std::to_string(kMaxWorlds));
  std::mt19937_64 rng(mix_seed(seed));
  CJModel m = CJModel::minimal(n);
  for (int s = 0; s < n; ++s) {
    Prop pv = Prop::world(s);
    for (int w = 0; w < n; ++w)
      if (w != s && chance(rng, 0.5)) pv = pv | Prop::world(w);
    Prop av;
    for (int w = 0; w < n; ++w)
      if (pv.contains(w) && chance(rng, 0.5)) av = av | Prop::world(w);
    if (av.empty()) {
      auto pick = static_cast<int>(below(rng, static_cast<std::uint64_t>(pv.count())));
      for (int w = 0; w < n; ++w) {
        if (!pv.contains(w)) continue;
        if (pick-- == 0) {
          av = Prop::world(w);
          break;
        }
      }
    }
    m.pv[s] = pv;
    m.av[s] = av;
  }
  for (const auto& name : atom_names) {
    Prop v;
    for (int w = 0; w < n; ++w)
      if (chance(rng, 0.5)) v = v | Prop::world(w);
    m.val[name] = v;
  }
  const auto props = static_cast<std::uint32_t>(m.num_props());
  for (std::uint32_t x = 1; x < props; ++x) {
    for (std::uint32_t t = 1; t <= x; ++t) {
      if (Prop{t}.subset_of(Prop{x}) && chance(rng, density)) m.ob[x].set(t);
    }
  }
  repair_ob(m);
  return m;
}

}  // namespace cjhol
