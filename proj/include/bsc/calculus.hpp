#pragma once

#include <variant>
#include <vector>

#include "bsc/bisequent.hpp"
#include "bsc/logics.hpp"
#include "bsc/schema.hpp"

namespace bsc {

struct Catalog {
  std::vector<RuleSchema> rules;
  std::vector<AxiomSchema> axioms;
};

// Throws IncompleteCatalog when a connective/slot pair has neither rule nor axiom.
Catalog catalog(const LogicDef& logic);

struct Occurrence {
  Slot slot;
  std::size_t index;
  bool operator==(const Occurrence&) const = default;
};

std::vector<Bisequent> apply_rule(const RuleSchema& rule, const Bisequent& b, Occurrence occ);

struct RuleVerdict {
  bool sound_and_invertible = true;
  std::vector<Value> counterexample;  // argument values of the first violating tuple
};

// Tuples are swept in table order 1, u, 0 (first argument outermost).
RuleVerdict verify_rule_schema(const TruthTable& table, const RuleSchema& rule);
RuleVerdict verify_rule_schema(const LogicDef& logic, const RuleSchema& rule);
// True iff the operation never satisfies the slot's falsification constraint.
bool verify_axiom_schema(const TruthTable& table, Slot slot);

using SynthesisResult = std::variant<RuleSchema, AxiomSchema>;

// Exact cover of the slot's region by premisses with the fewest premisses, then
// the fewest placements. The region is empty iff an axiom schema is returned.
SynthesisResult synthesize_rules(const TruthTable& table, Slot slot, Connective connective);
SynthesisResult synthesize_rules(const TruthTable& table, Slot slot);

}  // namespace bsc
