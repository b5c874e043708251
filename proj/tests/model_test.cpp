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

#include <gtest/gtest.h>

#include "support/printers.hpp"

#include "cjhol/model.hpp"
#include "cjhol/rng.hpp"
#include "support/cj_oracle.hpp"

namespace cjhol {
namespace {

using testing::member_of_ob;
using testing::ob3_all_families;

Prop P(std::initializer_list<int> worlds) {
  Prop p;
  for (int w : worlds) p = p | Prop::world(w);
  return p;
}

TEST(PropTest, SetAlgebra) {
  EXPECT_EQ(P({0, 2}).bits, 5u);
  EXPECT_EQ(to_string(P({0, 2})), "{0,2}");
  EXPECT_EQ(to_string(Prop{}), "{}");
  EXPECT_TRUE(P({1}).subset_of(P({0, 1})));
  EXPECT_FALSE(P({0, 1}).subset_of(P({1})));
  EXPECT_EQ(complement(P({0}), 3), P({1, 2}));
  EXPECT_EQ(P({0, 1}) - P({1}), P({0}));
  EXPECT_EQ(P({0, 1, 2}).count(), 3);
}

TEST(ValidateTest, MinimalModelIsValid) {
  const CJModel m = CJModel::minimal(1);
  EXPECT_TRUE(validate(m).ok());
  EXPECT_EQ(validate(m).to_string(), "valid\n");
}

TEST(ValidateTest, EmptyActualVersions) {
  CJModel m = CJModel::minimal(1);
  m.av[0] = Prop{};
  const ValidationReport r = validate(m);
  ASSERT_TRUE(r.has("av-nonempty"));
  EXPECT_EQ(r.violations.front().to_string(), "av-nonempty world 0");
}

TEST(ValidateTest, PotentialVersions) {
  CJModel m = CJModel::minimal(2);
  m.av[0] = P({1});
  EXPECT_TRUE(validate(m).has("pv1"));
  m.pv[0] = P({1});
  EXPECT_TRUE(validate(m).has("pv2"));
  m.pv[0] = P({0, 1});
  EXPECT_TRUE(validate(m).ok());
}

TEST(ValidateTest, Condition5Witness) {
  CJModel m = CJModel::minimal(2);
  m.add_obligation(P({0, 1}), P({0, 1}));
  const ValidationReport r = validate(m);
  ASSERT_TRUE(r.has("ob5")) << r.to_string();
  EXPECT_NE(r.to_string().find("Z not in ob(Y)"), std::string::npos);
  m.add_obligation(P({0}), P({0}));
  m.add_obligation(P({1}), P({1}));
  EXPECT_TRUE(validate(m).ok()) << validate(m).to_string();
}

TEST(ValidateTest, Condition3Closure) {
  CJModel m = CJModel::minimal(2);
  m.ob[P({0, 1}).bits].set(P({0}).bits);
  m.ob[P({0, 1}).bits].set(P({0, 1}).bits);
  EXPECT_TRUE(ob3_binary_closed(m.ob[3], P({0, 1})));
  CJModel bad = CJModel::minimal(3);
  bad.ob[7].set(P({0, 1}).bits);
  bad.ob[7].set(P({1, 2}).bits);
  EXPECT_FALSE(ob3_binary_closed(bad.ob[7], P({0, 1, 2})));
  EXPECT_TRUE(validate(bad).has("ob3"));
}

TEST(ValidateTest, NonCanonicalTracesAreReported) {
  CJModel m = CJModel::minimal(2);
  m.ob[P({0}).bits].set(P({0, 1}).bits);
  EXPECT_TRUE(validate(m).has("ob2"));
  CJModel e = CJModel::minimal(2);
  e.ob[P({0}).bits].set(0);
  EXPECT_TRUE(validate(e).has("ob1"));
}

TEST(ValidateTest, StructuralErrors) {
  CJModel m = CJModel::minimal(2);
  m.av[0] = P({3});
  EXPECT_THROW(validate(m), ModelError);
  CJModel short_av = CJModel::minimal(2);
  short_av.av.pop_back();
  EXPECT_THROW(validate(short_av), ModelError);
}

TEST(CanonicalizeTest, Examples) {
  RawOb raw;
  raw[P({0, 1})] = {P({0})};
  raw[P({0})] = {P({0, 1})};
  auto c = canonicalize(raw, 2);
  EXPECT_TRUE(c.ob[P({0}).bits].test(P({0}).bits));
  EXPECT_TRUE(c.ob[P({0, 1}).bits].test(P({0}).bits));
  EXPECT_EQ(c.ob[P({0}).bits].count(), 1u);

  RawOb empty_trace;
  empty_trace[P({0})] = {P({1})};
  c = canonicalize(empty_trace, 2);
  EXPECT_TRUE(c.ob[P({0}).bits].none());
  ASSERT_EQ(c.warnings.size(), 1u);
  EXPECT_NE(c.warnings[0].find("empty trace dropped"), std::string::npos);

  RawOb outside;
  outside[P({0})] = {P({2})};
  EXPECT_THROW(canonicalize(outside, 2), ModelError);
}

TEST(CanonicalizeProperty, Idempotent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CJModel m = random_model(3, {"p"}, seed, 0.3);
    const auto once = canonicalize(raw_ob(m), 3);
    EXPECT_EQ(once.ob, m.ob);
    EXPECT_TRUE(once.warnings.empty());
    CJModel copy = m;
    copy.ob = once.ob;
    EXPECT_EQ(canonicalize(raw_ob(copy), 3).ob, once.ob);
  }
}

TEST(JsonTest, RoundTrip) {
  const std::string text =
      R"({"worlds":2,"av":[[1],[1]],"pv":[[0,1],[1]],"ob":[{"context":[0,1],"members":[[1],[0,1]]},)"
      R"({"context":[0],"members":[[0]]},{"context":[1],"members":[[1]]}],"val":{"p":[1]}})";
  const Loaded loaded = load(text);
  EXPECT_TRUE(loaded.warnings.empty());
  const CJModel& m = loaded.model;
  EXPECT_EQ(m.n, 2);
  EXPECT_EQ(m.av[0], P({1}));
  EXPECT_EQ(m.pv[0], P({0, 1}));
  EXPECT_TRUE(m.obligatory(P({0, 1}), P({1})));
  EXPECT_EQ(m.val.at("p"), P({1}));
  EXPECT_EQ(load(save(m)).model, m);
  EXPECT_EQ(save(load(save(m)).model), save(m));
}

TEST(JsonTest, RandomModelsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CJModel m = random_model(1 + static_cast<int>(seed % 4), {"p", "q"}, seed, 0.4);
    EXPECT_EQ(load(save(m)).model, m);
  }
}

TEST(JsonTest, Errors) {
  try {
    load(R"({"worlds":1,"av":[[]],"pv":[[0]],"ob":[],"val":{}})");
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("av-nonempty world 0"), std::string::npos);
    EXPECT_TRUE(e.report().has("av-nonempty"));
  }
  EXPECT_NO_THROW(load(R"({"worlds":1,"av":[[]],"pv":[[0]],"ob":[],"val":{}})", true));
  try {
    load(R"({"worlds":2,"av":[[0],[5]],"pv":[[0],[1]],"ob":[],"val":{}})");
    FAIL() << "expected a model error";
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("/av/1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load("not json"), ModelError);
  EXPECT_THROW(load(R"({"worlds":0,"av":[],"pv":[],"ob":[],"val":{}})"), ModelError);
  EXPECT_THROW(load(R"({"worlds":1,"av":[[0]],"pv":[[0]],"ob":[],"val":{"Bad":[0]}})"), ModelError);
  EXPECT_THROW(load_file("/nonexistent/model.json"), ModelError);
}

TEST(JsonTest, MemberOutsideContextIsCanonicalized) {
  const Loaded loaded = load(
      R"({"worlds":2,"av":[[0],[1]],"pv":[[0],[1]],"ob":[{"context":[0],"members":[[0,1]]},)"
      R"({"context":[1],"members":[[1]]},{"context":[0,1],"members":[[0,1]]}],"val":{}})");
  EXPECT_TRUE(loaded.model.ob[P({0}).bits].test(P({0}).bits));
  EXPECT_FALSE(loaded.warnings.empty());
}

TEST(RandomModelTest, ValidAndDeterministic) {
  EXPECT_TRUE(validate(random_model(1, {"p"}, 5, 0.0)).ok());
  EXPECT_TRUE(validate(random_model(3, {"p", "q"}, 42, 0.3)).ok());
  EXPECT_EQ(random_model(4, {"p"}, 7, 0.5), random_model(4, {"p"}, 7, 0.5));
  EXPECT_THROW(random_model(0, {}, 0, 0.1), std::invalid_argument);
  EXPECT_THROW(random_model(9, {}, 0, 0.1), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const CJModel m = random_model(n, {"p"}, seed, static_cast<double>(seed % 7) / 6.0);
    ASSERT_TRUE(validate(m).ok()) << save(m) << "\n" << validate(m).to_string();
  }
}

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(enumerate_models(1, {}).size(), 2u);
  EXPECT_EQ(enumerate_models(1, {"p"}).size(), 4u);
  const auto two = enumerate_models(2, {});
  EXPECT_GT(two.size(), 2u);
  for (const CJModel& m : two) EXPECT_TRUE(validate(m).ok());
  // Exactly once each.
  std::set<std::string> seen;
  for (const CJModel& m : enumerate_models(2, {"p"})) EXPECT_TRUE(seen.insert(save(m)).second);
  EXPECT_EQ(seen.size(), two.size() * 4);
  EXPECT_THROW(enumerate_models(3, {}), std::invalid_argument);
}

TEST(EnumerateTest, FirstModelIsAllEmpty) {
  const auto models = enumerate_models(1, {"p"});
  EXPECT_TRUE(models.front().val.at("p").empty());
  EXPECT_TRUE(models.front().ob[1].none());
}

TEST(EnumerateTest, ObligationsAgreeWithFilter) {
  // Every valid ob component on 2 worlds, found by brute force over all
  // canonical trace sets, appears in enumerate_obligations.
  std::set<std::vector<std::string>> expected;
  const CJModel frame = CJModel::minimal(2);
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < 8; ++c) {
        CJModel m = frame;
        if (a) m.ob[1].set(1);
        if (b) m.ob[2].set(2);
        for (std::uint32_t t = 1; t <= 3; ++t)
          if ((c >> (t - 1)) & 1) m.ob[3].set(t);
        if (!validate(m).ok()) continue;
        std::vector<std::string> key;
        for (const auto& s : m.ob) key.push_back(s.to_string());
        expected.insert(key);
      }
  std::set<std::vector<std::string>> got;
  for (const auto& ob : enumerate_obligations(2)) {
    std::vector<std::string> key;
    for (const auto& s : ob) key.push_back(s.to_string());
    got.insert(key);
  }
  EXPECT_EQ(got, expected);
}

TEST(MembershipProperty, DependsOnlyOnTrace) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const CJModel m = random_model(1 + static_cast<int>(below(rng, 4)), {}, rng(), 0.4);
    const auto props = static_cast<std::uint32_t>(m.num_props());
    for (int j = 0; j < 20; ++j) {
      const std::uint32_t x = static_cast<std::uint32_t>(below(rng, props));
      const std::uint32_t y = static_cast<std::uint32_t>(below(rng, props));
      const std::uint32_t z = static_cast<std::uint32_t>(below(rng, props));
      if ((y & x) == (z & x)) EXPECT_EQ(m.obligatory(Prop{x}, Prop{y}), m.obligatory(Prop{x}, Prop{z}));
      EXPECT_FALSE(m.obligatory(Prop{x}, Prop{}));
      EXPECT_EQ(m.obligatory(Prop{x}, Prop{y}), member_of_ob(m, x, y));
    }
  }
}

TEST(Ob3Oracle, BinaryClosureMatchesAllFamilies) {
  for (int n = 1; n <= 2; ++n) {
    enumerate_models(n, {}, [&](const CJModel& m) {
      for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(m.num_props()); ++x)
        EXPECT_EQ(ob3_binary_closed(m.ob[x], Prop{x}), ob3_all_families(m, x));
      return true;
    });
  }
  // Also on closed and unclosed families at n = 3.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CJModel m = random_model(3, {}, seed, 0.3);
    std::mt19937_64 rng(seed);
    const auto x = static_cast<std::uint32_t>(1 + below(rng, 7));
    for (Prop t : m.traces(Prop{x}))
      if (chance(rng, 0.3)) m.ob[x].reset(t.bits);
    EXPECT_EQ(ob3_binary_closed(m.ob[x], Prop{x}), ob3_all_families(m, x));
  }
}

}  // namespace
}  // namespace cjhol
