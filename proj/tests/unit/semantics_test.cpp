#include <gtest/gtest.h>

#include <random>

#include "bsc/error.hpp"
#include "bsc/semantics.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace bsc;

namespace {

std::vector<Formula> L(const LogicDef& l, const std::string& s) { return parse_formula_list(s, l.signature()); }
Formula F(const LogicDef& l, const std::string& s) { return parse_formula(s, l.signature()); }
Bisequent B(const LogicDef& l, const std::string& s) { return parse_bisequent(s, l.signature()); }

}  // namespace

TEST(Semantics, ConsequenceExamplesAgreeWithReference) {
  const auto& k3 = lookup_logic("K3");
  const auto& lp = lookup_logic("LP");
  struct Case { const LogicDef* l; std::string gamma, phi; };
  for (const auto& c : std::vector<Case>{{&k3, "p, p -> q", "q"}, {&lp, "p, p -> q", "q"}, {&k3, "", "p | ~p"}}) {
    bool want = ref::consequence(c.l->name, L(*c.l, c.gamma), F(*c.l, c.phi));
    EXPECT_EQ(matrix_consequence(*c.l, L(*c.l, c.gamma), F(*c.l, c.phi)), want);
  }
  EXPECT_TRUE(matrix_consequence(k3, L(k3, "p, p -> q"), F(k3, "q")));
  EXPECT_FALSE(matrix_consequence(lp, L(lp, "p, p -> q"), F(lp, "q")));
  EXPECT_FALSE(matrix_consequence(ConsequenceQuery{k3, {}, F(k3, "p | ~p")}));
}

TEST(Semantics, CounterexampleIsTheFirstInEnumerationOrder) {
  const auto& lp = lookup_logic("LP");
  auto h = consequence_counterexample(lp, L(lp, "p, p -> q"), F(lp, "q"));
  ASSERT_TRUE(h);
  EXPECT_EQ(*h, (Assignment{{"p", Value::Undef}, {"q", Value::Zero}}));
}

TEST(Semantics, AtomCapIsEnforced) {
  const auto& k3 = lookup_logic("K3");
  Formula big = F(k3, "p1 & p2 & p3 & p4");
  try {
    matrix_consequence(k3, {}, big, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
  }
  EXPECT_NO_THROW(matrix_consequence(k3, {}, big, 4));
}

TEST(Semantics, BisequentValidityExamples) {
  const auto& k3 = lookup_logic("K3");
  EXPECT_TRUE(bisequent_valid(k3, B(k3, "p => p | =>")));
  EXPECT_FALSE(bisequent_valid(k3, B(k3, "=> p | p =>")));
  EXPECT_TRUE(bisequent_valid(k3, B(k3, "p => | => p")));
}

TEST(Semantics, FalsifyingAssignmentsExamples) {
  const auto& k3 = lookup_logic("K3");
  using V = std::vector<Assignment>;
  EXPECT_EQ(falsifying_assignments(k3, B(k3, "=> p | p =>")), (V{{{"p", Value::Undef}}}));
  EXPECT_TRUE(falsifying_assignments(k3, B(k3, "p => p | =>")).empty());
  EXPECT_EQ(falsifying_assignments(k3, B(k3, "=> (p | ~p) | =>")), (V{{{"p", Value::Undef}}}));
}

TEST(Semantics, FalsifiersAreLexicographic) {
  const auto& k3 = lookup_logic("K3");
  auto fs = falsifying_assignments(k3, B(k3, "=> p, q | =>"));
  ASSERT_EQ(fs.size(), 4u);
  EXPECT_EQ(fs[0], (Assignment{{"p", Value::Zero}, {"q", Value::Zero}}));
  EXPECT_EQ(fs[1], (Assignment{{"p", Value::Zero}, {"q", Value::Undef}}));
  EXPECT_EQ(fs[3], (Assignment{{"p", Value::Undef}, {"q", Value::Undef}}));
}

TEST(Semantics, ConsequenceMatchesGoalBisequent) {
  std::mt19937_64 rng(5);
  for (const auto& name : Registry::builtin().logic_names()) {
    const auto& l = lookup_logic(name);
    for (int i = 0; i < 60; ++i) {
      Formula g = gen::random_formula(rng, l.signature(), {"p", "q"}, static_cast<int>(rng() % 3));
      Formula phi = gen::random_formula(rng, l.signature(), {"p", "q"}, static_cast<int>(rng() % 3));
      Bisequent b = l.goal == GoalSequent::First ? Bisequent({g}, {phi}, {}, {}) : Bisequent({}, {}, {g}, {phi});
      EXPECT_EQ(matrix_consequence(l, {g}, phi), bisequent_valid(l, b));
      EXPECT_EQ(matrix_consequence(l, {g}, phi), ref::consequence(name, {g}, phi)) << name;
      EXPECT_EQ(bisequent_valid(l, b), falsifying_assignments(l, b).empty());
    }
  }
}

TEST(Semantics, ValidityAgreesWithReferenceAndIsMonotone) {
  std::mt19937_64 rng(9);
  const auto& l = lookup_logic("L3");
  for (int i = 0; i < 300; ++i) {
    Bisequent b;
    for (Slot s : kSlots)
      for (int k = static_cast<int>(rng() % 2); k > 0; --k)
        b[s].push_back(gen::random_formula(rng, l.signature(), {"p", "q"}, static_cast<int>(rng() % 3)));
    bool v = bisequent_valid(l, b);
    EXPECT_EQ(v, ref::valid("L3", b.slots));
    if (!v) continue;
    Bisequent w = b;
    w[kSlots[rng() % 4]].push_back(gen::random_formula(rng, l.signature(), {"p", "r"}, 2));
    EXPECT_TRUE(bisequent_valid(l, w));
  }
}

TEST(Semantics, CompiledFormulaMatchesEval) {
  const auto& l = lookup_logic("J3");
  std::mt19937_64 rng(1);
  std::vector<std::string> order{"p", "q"};
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::random_formula(rng, l.signature(), order, static_cast<int>(rng() % 6));
    CompiledFormula c(l, f, order);
    for_each_assignment(2, [&](const std::vector<Value>& h) {
      EXPECT_EQ(c(h), eval(l, {{"p", h[0]}, {"q", h[1]}}, f));
      return true;
    });
  }
}
