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

#include "cjhol/search.hpp"

#include <random>
#include <stdexcept>

#include "cjhol/checker.hpp"
#include "cjhol/rng.hpp"

namespace cjhol {

namespace {

// The first world where f fails, if any.
std::optional<int> failing_world(const CJModel& m, const Formula& f) {
  const Prop truth = truth_set(m, f);
  for (int s = 0; s < m.n; ++s)
    if (!truth.contains(s)) return s;
  return std::nullopt;
}

bool refutes(const CJModel& m, const Formula& f) { return validate(m).ok() && failing_world(m, f).has_value(); }

// m restricted to every world except w, renumbered.
CJModel drop_world(const CJModel& m, int w) {
  auto shrink = [w](Prop p) {
    const std::uint32_t low = p.bits & ((1u << w) - 1);
    const std::uint32_t high = (p.bits >> (w + 1)) << w;
    return Prop{low | high};
  };
  auto grow = [w](std::uint32_t bits) {
    const std::uint32_t low = bits & ((1u << w) - 1);
    const std::uint32_t high = (bits >> w) << (w + 1);
    return low | high;
  };
  CJModel out = CJModel::minimal(m.n - 1);
  for (int s = 0, t = 0; s < m.n; ++s) {
    if (s == w) continue;
    out.av[t] = shrink(m.av[s]);
    out.pv[t] = shrink(m.pv[s]);
    ++t;
  }
  for (int x = 0; x < out.num_props(); ++x) {
    const Prop context{static_cast<std::uint32_t>(x)};
    for (Prop trace : m.traces(Prop{grow(context.bits)})) out.add_obligation(context, shrink(trace));
  }
  for (const auto& [name, p] : m.val) out.val[name] = shrink(p);
  return out;
}

CounterModel finish(const Formula& f, CJModel m) {
  const auto world = failing_world(m, f);
  if (!validate(m).ok() || !world) throw std::logic_error("countermodel failed its re-check");
  return {std::move(m), *world};
}

}  // namespace

CounterModel minimize(const Formula& f, CounterModel c) {
  CJModel m = std::move(c.model);
  for (bool shrunk = true; shrunk && m.n > 1;) {
    shrunk = false;
    for (int w = 0; w < m.n; ++w) {
      CJModel smaller = drop_world(m, w);
      if (refutes(smaller, f)) {
        m = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  for (int x = 0; x < m.num_props(); ++x) {
    for (Prop trace : m.traces(Prop{static_cast<std::uint32_t>(x)})) {
      CJModel smaller = m;
      smaller.ob[x].reset(trace.bits);
      if (refutes(smaller, f)) m = std::move(smaller);
    }
  }
  return finish(f, std::move(m));
}

std::optional<CounterModel> find_countermodel(const Formula& f, int n_max, int samples, std::uint64_t seed) {
  if (n_max < 1 || n_max > kMaxSearchWorlds) {
    throw std::invalid_argument("max worlds must be between 1 and " + std::to_string(kMaxSearchWorlds));
  }
  if (samples < 0) throw std::invalid_argument("samples must be nonnegative");
  const std::set<std::string> names = atoms(f);

  std::optional<CJModel> hit;
  for (int n = 1; n <= std::min(n_max, kMaxEnumerationWorlds) && !hit; ++n) {
    enumerate_models(n, names, [&](const CJModel& m) {
      if (failing_world(m, f)) hit = m;
      return !hit;
    });
  }
  if (hit) return finish(f, std::move(*hit));

  for (int n = kMaxEnumerationWorlds + 1; n <= n_max; ++n) {
    for (int k = 0; k < samples; ++k) {
      std::mt19937_64 rng(mix_seed(mix_seed(seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(k)));
      const double density = 0.5 * unit(rng);
      CJModel m = random_model(n, names, rng(), density);
      if (const auto world = failing_world(m, f)) return minimize(f, {std::move(m), *world});
    }
  }
  return std::nullopt;
}

std::string countermodel_json(const CounterModel& c) {
  return "{\"world\":" + std::to_string(c.world) + ",\"model\":" + save(c.model) + "}";
}

std::string Verdict::to_string() const {
  if (counter) return countermodel_json(*counter);
  return "no counterexample up to " + std::to_string(max_worlds) + " worlds";
}

Verdict verdict(const Formula& f, int n_max, int samples, std::uint64_t seed) {
  return {find_countermodel(f, n_max, samples, seed), n_max};
}

}  // namespace cjhol
