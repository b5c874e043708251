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

// Direct satisfaction of CJ formulas in finite models.

#ifndef CJHOL_CHECKER_HPP_
#define CJHOL_CHECKER_HPP_

#include <string>
#include <vector>

#include "cjhol/formula.hpp"
#include "cjhol/model.hpp"

namespace cjhol {

// V(f): the worlds of m satisfying f, computed bottom-up. Atoms missing
// from m.val denote the empty set; a warning is appended to `warnings`
// when it is non-null.
Prop truth_set(const CJModel& m, const Formula& f, std::vector<std::string>* warnings = nullptr);

// M, s |= f. Throws std::out_of_range for a bad world index.
bool eval(const CJModel& m, int world, const Formula& f, std::vector<std::string>* warnings = nullptr);

bool valid_in_model(const CJModel& m, const Formula& f, std::vector<std::string>* warnings = nullptr);

}  // namespace cjhol

#endif  // CJHOL_CHECKER_HPP_
