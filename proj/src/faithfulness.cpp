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

#include <random>
#include <sstream>

#include "cjhol/checker.hpp"
#include "cjhol/henkin.hpp"
#include "cjhol/rng.hpp"

namespace cjhol {

std::string FaithfulnessReport::to_string() const {
  std::ostringstream out;
  for (const auto& m : mismatches) {
    out << "MISMATCH model=" << save(m.model) << " world=" << m.world << " formula=" << pretty(m.formula)
        << " kind=" << m.kind << "\n";
  }
  if (ok()) {
    out << "OK samples=" << samples << "\n";
  } else {
    out << "FAIL samples=" << samples << " mismatches=" << mismatches.size() << "\n";
  }
  return out.str();
}

FaithfulnessReport check_faithfulness(const FaithfulnessOptions& o) {
  if (o.min_worlds < 1 || o.max_worlds < o.min_worlds || o.max_worlds > kMaxWorlds) {
    throw std::invalid_argument("world range out of bounds");
  }
  if (o.samples < 0 || o.max_depth < 0 || o.max_atoms < 1) throw std::invalid_argument("bad sampling options");
  static const std::vector<std::string> kNames = {"p", "q", "r", "s", "t", "u", "v", "w"};
  const auto atom_pool = static_cast<std::uint64_t>(std::min<std::size_t>(o.max_atoms, kNames.size()));
  const HolTerm world_var = HolTerm::free("S", HolType::i());

  FaithfulnessReport report;
  for (int k = 0; k < o.samples; ++k) {
    std::mt19937_64 rng(mix_seed(o.seed, static_cast<std::uint64_t>(k)));
    const int n = o.min_worlds + static_cast<int>(below(rng, o.max_worlds - o.min_worlds + 1));
    const std::vector<std::string> names(kNames.begin(), kNames.begin() + 1 + below(rng, atom_pool));
    const double density = 0.5 * unit(rng);
    const std::uint64_t model_seed = rng();
    const CJModel m = random_model(n, {names.begin(), names.end()}, model_seed, density);
    const int depth = static_cast<int>(below(rng, static_cast<std::uint64_t>(o.max_depth) + 1));
    const Formula f = random_formula(rng, depth, names);
    const int world = static_cast<int>(below(rng, static_cast<std::uint64_t>(n)));

    const HenkinModel h = build_henkin(m);
    const HolTerm lifted_f = embed(f);
    Assignment g;
    g.free["S"] = Value::world(world);
    const bool direct = eval(m, world, f);
    const bool embedded = eval_term(h, g, apply(lifted_f, {world_var})).as_bool();
    if (direct != embedded) report.mismatches.push_back({m, world, f, "world"});
    if (valid_in_model(m, f) != holds(h, vld(lifted_f))) report.mismatches.push_back({m, world, f, "validity"});
    ++report.samples;
  }
  return report;
}

FaithfulnessReport check_faithfulness(int n_max, int samples, std::uint64_t seed) {
  if (n_max < 1 || n_max > 4) throw std::invalid_argument("n_max must be between 1 and 4");
  FaithfulnessOptions o;
  o.max_worlds = n_max;
  o.samples = samples;
  o.seed = seed;
  return check_faithfulness(o);
}

}  // namespace cjhol
