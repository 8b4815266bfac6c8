#include <gtest/gtest.h>

#include "bsc/error.hpp"
#include "bsc/logics.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace bsc;

namespace {

Formula P(const LogicDef& l, const std::string& s) { return parse_formula(s, l.signature()); }

char ch(Value v) { return value_name(v)[0]; }

}  // namespace

TEST(Logics, DesignatedSets) {
  EXPECT_EQ(lookup_logic("K3").designated(), std::vector<Value>{Value::One});
  EXPECT_EQ(lookup_logic("LP").designated(), (std::vector<Value>{Value::Undef, Value::One}));
  EXPECT_EQ(lookup_logic("K3").goal, GoalSequent::First);
  EXPECT_EQ(lookup_logic("LP").goal, GoalSequent::Second);
}

TEST(Logics, UnknownLogicListsNames) {
  try {
    lookup_logic("B4");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownLogic);
    EXPECT_NE(std::string(e.what()).find("K3"), std::string::npos);
  }
}

TEST(Logics, RegistryCoversRequiredNames) {
  for (const auto& [name, _] : ref::logics()) EXPECT_NO_THROW(lookup_logic(name)) << name;
}

TEST(Logics, EvalExamples) {
  const auto& k3 = lookup_logic("K3");
  EXPECT_EQ(eval(k3, {{"p", Value::One}, {"q", Value::Undef}}, P(k3, "p & q")), Value::Undef);
  const auto& l3 = lookup_logic("L3");
  EXPECT_EQ(eval(l3, {{"p", Value::Undef}, {"q", Value::Undef}}, P(l3, "p -> q")), Value::One);
  const auto& p3 = lookup_logic("P3");
  EXPECT_EQ(eval(p3, {{"p", Value::One}}, P(p3, "neg_p p")), Value::Undef);
}

TEST(Logics, EvalErrors) {
  const auto& k3 = lookup_logic("K3");
  EXPECT_THROW(eval(k3, {{"p", Value::One}}, P(k3, "p & q")), Error);
  Formula box = Formula::unary(Connective::Box, Formula::atom("p"));
  try {
    eval(k3, {{"p", Value::One}}, box);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownConnective);
  }
  EXPECT_THROW(eval(lookup_logic("K3w"), {}, Formula::constant(ConstantKind::Top)), Error);
}

TEST(Logics, StoredTablesMatchIndependentTranscription) {
  for (const auto& [name, cells] : ref::tables()) {
    auto t = Registry::builtin().table(name);
    ASSERT_TRUE(t) << name;
    for (Value a : kValues) {
      if (t->arity == 1) {
        EXPECT_EQ(ch((*t)(a)), ref::apply(cells, ch(a))) << name;
        continue;
      }
      for (Value b : kValues)
        EXPECT_EQ(ch((*t)(a, b)), ref::apply(cells, ch(a), ch(b))) << name << " " << ch(a) << ch(b);
    }
  }
  EXPECT_EQ(Registry::builtin().tables().size(), ref::tables().size());
}

TEST(Logics, BindingsMatchIndependentTranscription) {
  for (const auto& [name, rl] : ref::logics()) {
    const auto& l = lookup_logic(name);
    EXPECT_EQ(l.designated().size(), rl.designated.size()) << name;
    for (int i = 0; i < kConnectiveCount; ++i) {
      auto c = static_cast<Connective>(i);
      auto it = rl.ops.find(c);
      ASSERT_EQ(l.has(c), it != rl.ops.end()) << name << " " << token(c);
      if (l.has(c)) EXPECT_EQ(l.table(c).name, it->second) << name;
    }
  }
}

TEST(Logics, SharedTablesAreSingleObjects) {
  const auto& k3 = lookup_logic("K3");
  const auto& l3 = lookup_logic("L3");
  EXPECT_EQ(&k3.table(Connective::Neg), &l3.table(Connective::Neg));
}

TEST(Logics, LukasiewiczDefinabilityEquations) {
  const auto& l3 = lookup_logic("L3");
  std::vector<std::pair<std::string, std::string>> eqs{
      {"p | q", "(p -> q) -> q"},
      {"p & q", "~(~p | ~q)"},
      {"p and_l q", "~(p -> ~q)"},
      {"p or_l q", "~p -> q"},
  };
  for (const auto& [lhs, rhs] : eqs) {
    Formula f = P(l3, lhs), g = P(l3, rhs);
    for (Value a : kValues)
      for (Value b : kValues) {
        Assignment h{{"p", a}, {"q", b}};
        EXPECT_EQ(eval(l3, h, f), eval(l3, h, g)) << lhs << " vs " << rhs;
      }
  }
}

TEST(Logics, EvalDependsOnlyOnOwnAtoms) {
  std::mt19937_64 rng(3);
  for (const auto& name : Registry::builtin().logic_names()) {
    const auto& l = lookup_logic(name);
    for (int i = 0; i < 50; ++i) {
      Formula f = gen::random_formula(rng, l.signature(), {"p", "q"}, 3);
      Assignment h{{"p", kValues[rng() % 3]}, {"q", kValues[rng() % 3]}};
      Assignment g = h;
      g["r"] = kValues[rng() % 3];
      EXPECT_EQ(eval(l, h, f), eval(l, g, f));
    }
  }
}

TEST(Logics, CatalogFileExtendsRegistry) {
  Registry r = Registry::builtin();
  r.load_text(
      "table neg_G 1 u 1 0\n"
      "rules neg_G : (~=>|)\n"
      "logic Partial designated 1 : neg=neg_G\n");
  auto l = r.logic("Partial");
  EXPECT_EQ(eval(*l, {{"p", Value::One}}, parse_formula("~p", l->signature())), Value::Undef);
  EXPECT_EQ(l->uncovered().size(), 3u);
}

TEST(Logics, MalformedCatalogRecordsAreRejected) {
  Registry r;
  EXPECT_THROW(r.load_text("table t 2 1 u 0"), Error);
  EXPECT_THROW(r.load_text("logic X designated 0 : neg=neg_K"), Error);
  EXPECT_THROW(r.load_text("rule (x) 1 ant9 : suc2:A"), Error);
  EXPECT_THROW(r.load_text("frobnicate"), Error);
}
