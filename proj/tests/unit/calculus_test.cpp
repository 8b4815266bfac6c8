#include <gtest/gtest.h>

#include <random>

#include "bsc/calculus.hpp"
#include "bsc/error.hpp"
#include "support/generators.hpp"

using namespace bsc;

namespace {

Bisequent B(const std::string& s, const std::string& logic = "K3") {
  return parse_bisequent(s, lookup_logic(logic).signature());
}

const RuleSchema& named(const LogicDef& l, const std::string& name) {
  for (const auto& r : l.rules())
    if (r.name == name) return r;
  throw std::runtime_error("no rule " + name);
}

}  // namespace

TEST(Calculus, K3NegationRule) {
  const auto& k3 = lookup_logic("K3");
  Catalog cat = catalog(k3);
  EXPECT_EQ(cat.rules.size(), 16u);
  const auto& r = named(k3, "(~=>|)");
  EXPECT_EQ(r.principal_slot, Slot::Ant1);
  ASSERT_EQ(r.premisses.size(), 1u);
  EXPECT_EQ(r.premisses[0].placements, (std::vector<Placement>{{Slot::Suc2, 0}}));
}

TEST(Calculus, LukasiewiczImplicationHasThreePremisses) {
  EXPECT_EQ(named(lookup_logic("L3"), "(->_L=>|)").premisses.size(), 3u);
}

TEST(Calculus, PalasinskaAxiomSchema) {
  Catalog cat = catalog(lookup_logic("Palasinska1"));
  EXPECT_EQ(cat.rules.size(), 3u);
  ASSERT_EQ(cat.axioms.size(), 1u);
  EXPECT_EQ(cat.axioms[0], (AxiomSchema{Connective::Circ1, Slot::Suc2}));
}

TEST(Calculus, IncompleteCatalogIsReported) {
  Registry r = Registry::builtin();
  r.load_text("logic Half designated 1 : neg=neg_K and=and_L\n");
  EXPECT_NO_THROW(catalog(*r.logic("Half")));
  r.load_text("table and_X 2 1 u 0 / u u 0 / 0 0 0\nlogic Bare designated 1 : and=and_X\n");
  try {
    catalog(*r.logic("Bare"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteCatalog);
  }
}

TEST(Calculus, ApplyNegationLeft) {
  const auto& k3 = lookup_logic("K3");
  auto out = apply_rule(named(k3, "(~=>|)"), B("~p, q => | =>"), {Slot::Ant1, 0});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], B("q => | => p"));
}

TEST(Calculus, ApplyConjunctionRight) {
  const auto& k3 = lookup_logic("K3");
  auto out = apply_rule(named(k3, "(=>&|)"), B("=> p & q | r =>"), {Slot::Suc1, 0});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], B("=> p | r =>"));
  EXPECT_EQ(out[1], B("=> q | r =>"));
}

TEST(Calculus, ApplyPostNegationDuplicatesSideFormula) {
  const auto& p3 = lookup_logic("P3");
  auto out = apply_rule(named(p3, "(|=>~_P)"), B("=> | => neg_p p", "P3"), {Slot::Suc2, 0});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], B("=> p | p =>", "P3"));
}

TEST(Calculus, ApplyRuleRejectsMismatch) {
  const auto& k3 = lookup_logic("K3");
  EXPECT_THROW(apply_rule(named(k3, "(~=>|)"), B("p & q => | =>"), {Slot::Ant1, 0}), Error);
  EXPECT_THROW(apply_rule(named(k3, "(~=>|)"), B("=> ~p | =>"), {Slot::Suc1, 0}), Error);
  EXPECT_THROW(apply_rule(named(k3, "(~=>|)"), B("~p => | =>"), {Slot::Ant1, 3}), Error);
}

TEST(Calculus, VerifyCatalogRule) {
  const auto& k3 = lookup_logic("K3");
  EXPECT_TRUE(verify_rule_schema(k3, named(k3, "(&=>|)")).sound_and_invertible);
  const auto& s3 = lookup_logic("S3prime");
  EXPECT_TRUE(verify_rule_schema(s3, named(s3, "(=>->_S'|)")).sound_and_invertible);
}

TEST(Calculus, VerifyFindsFirstCounterexample) {
  const auto& k3 = lookup_logic("K3");
  RuleSchema broken = named(k3, "(&=>|)");
  broken.premisses = {PremissSchema{{{Slot::Ant1, 0}}}};
  auto v = verify_rule_schema(k3, broken);
  EXPECT_FALSE(v.sound_and_invertible);
  EXPECT_EQ(v.counterexample, (std::vector<Value>{Value::One, Value::Undef}));
}

TEST(Calculus, EveryCatalogRuleVerifies) {
  for (const auto& name : Registry::builtin().logic_names()) {
    const auto& l = lookup_logic(name);
    Catalog cat = catalog(l);
    for (const auto& r : cat.rules)
      EXPECT_TRUE(verify_rule_schema(l, r).sound_and_invertible) << name << " " << r.name;
    for (const auto& a : cat.axioms) EXPECT_TRUE(verify_axiom_schema(l.table(a.connective), a.slot));
  }
}

TEST(Calculus, SynthesisExamples) {
  const auto& reg = Registry::builtin();
  auto neg = synthesize_rules(*reg.table("neg_K"), Slot::Ant1, Connective::Neg);
  ASSERT_TRUE(std::holds_alternative<RuleSchema>(neg));
  EXPECT_EQ(std::get<RuleSchema>(neg).premisses,
            (std::vector<PremissSchema>{{{{Slot::Suc2, 0}}}}));

  auto circ = synthesize_rules(*reg.table("circ1"), Slot::Suc2, Connective::Circ1);
  ASSERT_TRUE(std::holds_alternative<AxiomSchema>(circ));
  EXPECT_EQ(std::get<AxiomSchema>(circ), (AxiomSchema{Connective::Circ1, Slot::Suc2}));

  auto conj = synthesize_rules(*reg.table("and_K"), Slot::Suc1, Connective::And);
  ASSERT_TRUE(std::holds_alternative<RuleSchema>(conj));
  EXPECT_EQ(std::get<RuleSchema>(conj).premisses,
            (std::vector<PremissSchema>{{{{Slot::Suc1, 0}}}, {{{Slot::Suc1, 1}}}}));
}

TEST(Calculus, SynthesisStaysWithinFourPremissesOnCatalogTables) {
  for (const auto& t : Registry::builtin().tables())
    for (Slot s : kSlots) {
      auto res = synthesize_rules(*t, s);
      if (auto* r = std::get_if<RuleSchema>(&res)) EXPECT_LE(r->premisses.size(), 4u) << t->name;
    }
}

TEST(Calculus, SynthesisSelfCertifies) {
  for (const auto& t : Registry::builtin().tables())
    for (Slot s : kSlots) {
      auto r = synthesize_rules(*t, s);
      if (auto* rule = std::get_if<RuleSchema>(&r))
        EXPECT_TRUE(verify_rule_schema(*t, *rule).sound_and_invertible) << t->name;
      else
        EXPECT_TRUE(verify_axiom_schema(*t, s)) << t->name;
    }
}

TEST(Calculus, SynthesisCoversArbitraryTables) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    TruthTable t;
    t.name = "random";
    t.arity = 1 + static_cast<int>(rng() % 2);
    for (auto& c : t.cells) c = kValues[rng() % 3];
    for (Slot s : kSlots) {
      auto r = synthesize_rules(t, s);
      if (auto* rule = std::get_if<RuleSchema>(&r)) {
        EXPECT_TRUE(verify_rule_schema(t, *rule).sound_and_invertible);
        EXPECT_LE(rule->premisses.size(), t.arity == 1 ? 3u : 9u);
      } else {
        EXPECT_TRUE(verify_axiom_schema(t, s));
      }
    }
  }
}

TEST(Calculus, ApplyRuleRoundTripAndSubformulaProperty) {
  std::mt19937_64 rng(21);
  for (const auto& name : Registry::builtin().logic_names()) {
    const auto& l = lookup_logic(name);
    for (const auto& rule : l.rules()) {
      for (int i = 0; i < 5; ++i) {
        Bisequent ctx;
        for (Slot s : kSlots)
          if (rng() % 2) ctx[s].push_back(gen::random_formula(rng, l.signature(), {"p", "q"}, 1));
        std::vector<Formula> args;
        for (int k = 0; k < rule.arity; ++k)
          args.push_back(gen::random_formula(rng, l.signature(), {"p", "q", "r"}, static_cast<int>(rng() % 2)));
        Formula principal = Formula::compound(rule.connective, args);
        Bisequent concl = ctx;
        concl[rule.principal_slot].push_back(principal);
        auto prems = apply_rule(rule, concl, {rule.principal_slot, concl[rule.principal_slot].size() - 1});
        ASSERT_EQ(prems.size(), rule.premisses.size());
        for (std::size_t k = 0; k < prems.size(); ++k) {
          Bisequent back = prems[k];
          for (const auto& pl : rule.premisses[k].placements) {
            auto& v = back[pl.slot];
            auto it = std::find(v.begin(), v.end(), args[pl.arg_index]);
            ASSERT_NE(it, v.end());
            v.erase(it);
          }
          EXPECT_EQ(back, ctx);
          EXPECT_EQ(prems[k].size(), ctx.size() + rule.premisses[k].placements.size());
        }
      }
    }
  }
}
