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

#include <gtest/gtest.h>

#include "support/printers.hpp"

#include "cjhol/checker.hpp"
#include "cjhol/henkin.hpp"
#include "cjhol/search.hpp"

namespace cjhol {
namespace {

void expect_sound(const Formula& f, const CounterModel& c) {
  EXPECT_TRUE(validate(c.model).ok()) << save(c.model);
  EXPECT_FALSE(eval(c.model, c.world, f));
  EXPECT_FALSE(holds(build_henkin(c.model), vld(embed(f))));
}

TEST(FindCountermodelTest, RefutedFormulas) {
  const Formula ap = parse("[a]p -> p");
  const auto c = find_countermodel(ap, 3, 100, 0);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->model.n, 2);
  expect_sound(ap, *c);

  const Formula p = parse("p");
  const auto cp = find_countermodel(p, 3, 100, 0);
  ASSERT_TRUE(cp.has_value());
  EXPECT_EQ(cp->model.n, 1);
  EXPECT_EQ(cp->world, 0);
  EXPECT_TRUE(cp->model.val.at("p").empty());

  const Formula oa = parse("Oa(F)");
  const auto co = find_countermodel(oa, 3, 100, 0);
  ASSERT_TRUE(co.has_value());
  EXPECT_EQ(co->model.n, 1);
  EXPECT_EQ(co->world, 0);
  expect_sound(oa, *co);
}

TEST(FindCountermodelTest, ValidFormulas) {
  for (const char* text : {"[p]p -> p", "~p | p", "O(p/q) -> []O(p/q)", "~Oa(F)"}) {
    EXPECT_FALSE(find_countermodel(parse(text), 4, 200, 1).has_value()) << text;
  }
}

TEST(FindCountermodelTest, Errors) {
  EXPECT_THROW(find_countermodel(parse("p"), 5, 1, 0), std::invalid_argument);
  EXPECT_THROW(find_countermodel(parse("p"), 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(find_countermodel(parse("p"), 2, -1, 0), std::invalid_argument);
}

TEST(FindCountermodelTest, Deterministic) {
  const Formula f = parse("[p]q -> [a]q & Op q");
  const auto a = find_countermodel(f, 4, 50, 5);
  const auto b = find_countermodel(f, 4, 50, 5);
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) {
    EXPECT_EQ(a->model, b->model);
    EXPECT_EQ(a->world, b->world);
  }
}

TEST(FindCountermodelTest, ExhaustiveTierFindsPlantedCountermodels) {
  // For each 2-world model and formula refuted there, the search (which
  // sees no larger models) still finds a countermodel.
  const std::vector<Formula> formulas = {parse("[a]p -> p"), parse("p -> [a]p"), parse("O(p/q)"),
                                         parse("Oa p -> [p]p"), parse("O(p/T) -> Op p"), parse("<>p -> <a>p")};
  for (const Formula& f : formulas) {
    bool refutable = false;
    enumerate_models(2, atoms(f), [&](const CJModel& m) {
      refutable = !valid_in_model(m, f);
      return !refutable;
    });
    const auto c = find_countermodel(f, 2, 0, 0);
    EXPECT_EQ(c.has_value(), refutable) << pretty(f);
    if (c) expect_sound(f, *c);
  }
}

TEST(FindCountermodelTest, RandomTierIsUsedAboveTwoWorlds) {
  // Refuting this needs three distinct worlds.
  const Formula f = parse("~(p & ~q & <>(~p & q) & <>(~p & ~q))");
  EXPECT_FALSE(find_countermodel(f, 2, 0, 0).has_value());
  const auto c = find_countermodel(f, 3, 500, 0);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->model.n, 3);
  expect_sound(f, *c);
}

TEST(MinimizeTest, DropsUnneededWorlds) {
  const Formula f = parse("p");
  CJModel m = random_model(4, {"p"}, 3, 0.0);
  m.val["p"] = Prop{0b0110};
  const CounterModel c = minimize(f, {m, 0});
  EXPECT_LT(c.model.n, 4);
  expect_sound(f, c);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CJModel r = random_model(4, {"p"}, seed, 0.4);
    r.val["p"] = Prop{0b0110};
    const CounterModel small = minimize(f, {r, 0});
    EXPECT_LE(small.model.n, 4);
    expect_sound(f, small);
  }
}

TEST(VerdictTest, Wording) {
  const Verdict ok = verdict(parse("[p]p -> p"), 3, 100, 0);
  EXPECT_FALSE(ok.refuted());
  EXPECT_EQ(ok.to_string(), "no counterexample up to 3 worlds");
  const Verdict bad = verdict(parse("p"), 3, 100, 0);
  ASSERT_TRUE(bad.refuted());
  EXPECT_EQ(bad.to_string(), R"({"world":0,"model":{"av":[[0]],"ob":[],"pv":[[0]],"val":{"p":[]},"worlds":1}})");
}

}  // namespace
}  // namespace cjhol
