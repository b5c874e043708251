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

// Bounded countermodel search over finite CJ models.

#ifndef CJHOL_SEARCH_HPP_
#define CJHOL_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "cjhol/formula.hpp"
#include "cjhol/model.hpp"

namespace cjhol {

inline constexpr int kMaxSearchWorlds = 4;

struct CounterModel {
  CJModel model;
  int world = 0;
};

// Every valid model with n <= 2 in enumeration order, then `samples`
// seeded random models for each n in 3..n_max. The first model found
// is re-checked; a random-tier hit is greedily shrunk first. Throws
// std::invalid_argument unless 1 <= n_max <= kMaxSearchWorlds.
std::optional<CounterModel> find_countermodel(const Formula& f, int n_max, int samples, std::uint64_t seed);

// Deletes worlds, then traces, while the model stays valid and f stays
// false somewhere. Deterministic.
CounterModel minimize(const Formula& f, CounterModel c);

struct Verdict {
  std::optional<CounterModel> counter;
  int max_worlds = 0;

  bool refuted() const { return counter.has_value(); }
  // "no counterexample up to N worlds", or the countermodel as
  // {"world":k,"model":{...}}.
  std::string to_string() const;
};

Verdict verdict(const Formula& f, int n_max, int samples, std::uint64_t seed);

// {"world":k,"model":{...}}
std::string countermodel_json(const CounterModel& c);

}  // namespace cjhol

#endif  // CJHOL_SEARCH_HPP_
