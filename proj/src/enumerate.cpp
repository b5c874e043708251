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

#include <stdexcept>

#include "cjhol/model.hpp"

namespace cjhol {

namespace {

void check_cap(int n) {
  if (n < 1 || n > kMaxEnumerationWorlds) {
    throw std::invalid_argument("exhaustive enumeration is capped at " +
                                std::to_string(kMaxEnumerationWorlds) + " worlds (got " +
                                std::to_string(n) + ")");
  }
}

struct WorldFrame {
  Prop av;
  Prop pv;
};

// (av, pv) choices for a single world s.
std::vector<WorldFrame> world_frames(int n, int s) {
  std::vector<WorldFrame> out;
  const auto props = 1u << n;
  for (std::uint32_t pv = 0; pv < props; ++pv) {
    if (!Prop{pv}.contains(s)) continue;
    for (std::uint32_t av = 1; av < props; ++av) {
      if (Prop{av}.subset_of(Prop{pv})) out.push_back({Prop{av}, Prop{pv}});
    }
  }
  return out;
}

// Advances a mixed-radix counter; false once it wraps around.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace

std::vector<std::vector<PropSet>> enumerate_obligations(int n) {
  check_cap(n);
  const auto props = 1u << n;
  // Candidate trace families per nonempty context, as lists of traces.
  std::vector<std::vector<Prop>> context_traces;
  std::vector<std::size_t> radix;
  for (std::uint32_t x = 1; x < props; ++x) {
    std::vector<Prop> ts;
    for (std::uint32_t t = 1; t <= x; ++t)
      if (Prop{t}.subset_of(Prop{x})) ts.push_back(Prop{t});
    radix.push_back(std::size_t{1} << ts.size());
    context_traces.push_back(std::move(ts));
  }
  std::vector<std::vector<PropSet>> out;
  std::vector<std::size_t> digits(radix.size(), 0);
  CJModel probe = CJModel::minimal(n);
  do {
    probe.ob.assign(props, PropSet{});
    for (std::size_t c = 0; c < digits.size(); ++c) {
      for (std::size_t k = 0; k < context_traces[c].size(); ++k) {
        if ((digits[c] >> k) & 1u) probe.ob[c + 1].set(context_traces[c][k].bits);
      }
    }
    if (validate(probe).ok()) out.push_back(probe.ob);
  } while (advance(digits, radix));
  return out;
}

void enumerate_models(int n, const std::set<std::string>& atom_names,
                      const std::function<bool(const CJModel&)>& visit) {
  check_cap(n);
  std::vector<std::vector<WorldFrame>> frames;
  std::vector<std::size_t> frame_radix;
  for (int s = 0; s < n; ++s) {
    frames.push_back(world_frames(n, s));
    frame_radix.push_back(frames.back().size());
  }
  const std::vector<std::vector<PropSet>> obs = enumerate_obligations(n);
  const std::vector<std::string> names(atom_names.begin(), atom_names.end());
  const std::vector<std::size_t> val_radix(names.size(), std::size_t{1} << n);

  CJModel m = CJModel::minimal(n);
  std::vector<std::size_t> frame_digits(n, 0);
  do {
    for (int s = 0; s < n; ++s) {
      m.av[s] = frames[s][frame_digits[s]].av;
      m.pv[s] = frames[s][frame_digits[s]].pv;
    }
    for (const auto& ob : obs) {
      m.ob = ob;
      std::vector<std::size_t> val_digits(names.size(), 0);
      do {
        m.val.clear();
        for (std::size_t k = 0; k < names.size(); ++k)
          m.val[names[k]] = Prop{static_cast<std::uint32_t>(val_digits[k])};
        if (!visit(m)) return;
      } while (advance(val_digits, val_radix));
    }
  } while (advance(frame_digits, frame_radix));
}

std::vector<CJModel> enumerate_models(int n, const std::set<std::string>& atom_names) {
  std::vector<CJModel> out;
  enumerate_models(n, atom_names, [&](const CJModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace cjhol
