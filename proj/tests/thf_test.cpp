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

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support/printers.hpp"

#include "cjhol/embed.hpp"
#include "cjhol/thf.hpp"
#include "support/thf_tokens.hpp"

#ifndef CJHOL_GOLDEN_DIR
#error "CJHOL_GOLDEN_DIR must name the golden file directory"
#endif

namespace cjhol {
namespace {

const HolType o = HolType::o();
const HolType i = HolType::i();
const HolType tau = HolType::tau();

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST(ThfTypeTest, Rendering) {
  EXPECT_EQ(to_thf_type(o), "$o");
  EXPECT_EQ(to_thf_type(HolType::arrow(i, tau)), "$i > $i > $o");
  EXPECT_EQ(to_thf_type(ob_const().type()), "($i > $o) > ($i > $o) > $o");
}

TEST(ThfTermTest, Examples) {
  EXPECT_EQ(to_thf_term(axioms()[0].term), "![V0:$i]: ?[V1:$i]: ((av @ V0) @ V1)");
  EXPECT_EQ(to_thf_term(embed(parse("p"))), "p");
  EXPECT_EQ(to_thf_term(vld(embed(parse("p")))), "![V0:$i]: (p @ V0)");
  EXPECT_EQ(to_thf_term(vld(embed(parse("~p | p")))), "![V0:$i]: (~(p @ V0) | (p @ V0))");
  EXPECT_EQ(to_thf_term(vld(embed(parse("p & q")))), "![V0:$i]: ((p @ V0) & (q @ V0))");
  EXPECT_EQ(to_thf_term(not_const()), "^[V0:$o]: ~V0");
  EXPECT_EQ(to_thf_term(eq(HolTerm::constant("a", i), HolTerm::constant("b", i))), "(a = b)");
  EXPECT_THROW(to_thf_term(HolTerm::free("X", i)), ThfError);
}

TEST(ThfProblemTest, Layout) {
  const ThfProblem p = to_thf_problem(parse("~p | p"));
  ASSERT_EQ(p.formulas.size(), 4u + 8u + 1u);
  EXPECT_EQ(p.formulas[0].name, "av_type");
  EXPECT_EQ(p.formulas[0].body, "av: $i > $i > $o");
  EXPECT_EQ(p.formulas[3].body, "p: $i > $o");
  int axioms_seen = 0;
  for (const auto& f : p.formulas) axioms_seen += f.role == "axiom";
  EXPECT_EQ(axioms_seen, 8);
  EXPECT_EQ(p.formulas.back().role, "conjecture");
  EXPECT_EQ(p.formulas.back().body, "![V0:$i]: (~(p @ V0) | (p @ V0))");
  const std::string text = p.to_string();
  EXPECT_EQ(text.rfind("thf(av_type, type, av: $i > $i > $o).\n", 0), 0u);
  EXPECT_EQ(axioms_problem().formulas.size(), 11u);
}

TEST(ThfProblemTest, TokenizerRoundTripOnRandomFormulas) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    const Formula f = random_formula(rng, 6, {"p", "q", "r"});
    const std::string text = to_thf_problem(f).to_string();
    EXPECT_EQ(text, to_thf_problem(f).to_string());
    testing::ThfChecker checker;
    ASSERT_NO_THROW(checker.check_file(text)) << text;
    EXPECT_EQ(checker.axioms, 8);
    EXPECT_EQ(checker.conjectures, 1);
  }
  testing::ThfChecker checker;
  EXPECT_NO_THROW(checker.check_file(axioms_problem().to_string()));
}

TEST(ThfCheckerTest, RejectsBrokenFiles) {
  testing::ThfChecker undeclared;
  EXPECT_THROW(undeclared.check_file("thf(goal, conjecture, ![V0:$i]: (p @ V0)).\n"), testing::ThfSyntaxError);
  testing::ThfChecker unbound;
  EXPECT_THROW(unbound.check_file("thf(p_type, type, p: $i > $o).\nthf(goal, conjecture, (p @ V0)).\n"),
               testing::ThfSyntaxError);
  testing::ThfChecker chained;
  EXPECT_THROW(chained.check_file("thf(p_type, type, p: $i > $o).\nthf(goal, conjecture, ![V0:$i]: (p @ V0 @ V0)).\n"),
               testing::ThfSyntaxError);
  testing::ThfChecker spacing;
  EXPECT_THROW(spacing.check_file("thf(p_type,type, p: $i > $o).\n"), testing::ThfSyntaxError);
}

struct Golden {
  const char* file;
  const char* formula;
};

class GoldenTest : public ::testing::TestWithParam<Golden> {};

TEST_P(GoldenTest, ByteIdentical) {
  const std::string path = std::string(CJHOL_GOLDEN_DIR) + "/" + GetParam().file;
  const std::string expected = read_file(path);
  ASSERT_FALSE(expected.empty()) << path;
  EXPECT_EQ(to_thf_problem(parse(GetParam().formula)).to_string(), expected);
  testing::ThfChecker checker;
  EXPECT_NO_THROW(checker.check_file(expected));
}

INSTANTIATE_TEST_SUITE_P(Problems, GoldenTest,
                         ::testing::Values(Golden{"box_p_reflexive.p", "[p]p -> p"},
                                           Golden{"excluded_middle.p", "~p | p"},
                                           Golden{"obligation_necessitation.p", "O(p / q) -> [] O(p / q)"}),
                         [](const ::testing::TestParamInfo<Golden>& info) {
                           const std::string file = info.param.file;
                           return file.substr(0, file.find('.'));
                         });

}  // namespace
}  // namespace cjhol
