#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bsc/bisequent.hpp"
#include "bsc/formula.hpp"
#include "bsc/logics.hpp"

namespace bsc {

inline constexpr int kDefaultMaxAtoms = 12;

struct ConsequenceQuery {
  const LogicDef& logic;
  std::vector<Formula> premisses;
  Formula conclusion;
};

// Formula compiled to postfix over atom indices, for repeated evaluation.
class CompiledFormula {
 public:
  CompiledFormula(const LogicDef& logic, const Formula& f, const std::vector<std::string>& atom_order);
  Value operator()(const std::vector<Value>& h) const;

 private:
  struct Op {
    const TruthTable* table;  // null for leaves
    int atom;                 // -1 for constants and compound nodes
    Value constant;
  };
  std::vector<Op> code_;
};

// Calls visit(h) for every assignment over atom_order (sorted), first atom most
// significant, values in order 0, u, 1. Stops early when visit returns false.
void for_each_assignment(std::size_t n_atoms, const std::function<bool(const std::vector<Value>&)>& visit);

bool matrix_consequence(const ConsequenceQuery& q, int max_atoms = kDefaultMaxAtoms);
bool matrix_consequence(const LogicDef& logic, const std::vector<Formula>& premisses,
                        const Formula& conclusion, int max_atoms = kDefaultMaxAtoms);
// First assignment designating all premisses but not the conclusion.
std::optional<Assignment> consequence_counterexample(const LogicDef& logic,
                                                     const std::vector<Formula>& premisses,
                                                     const Formula& conclusion,
                                                     int max_atoms = kDefaultMaxAtoms);

// ant1: v=1, suc1: v!=1, ant2: v!=0, suc2: v=0.
bool slot_constraint(Slot s, Value v);
bool falsifies(const LogicDef& logic, const Assignment& h, const Bisequent& b);

bool bisequent_valid(const LogicDef& logic, const Bisequent& b, int max_atoms = kDefaultMaxAtoms);
std::vector<Assignment> falsifying_assignments(const LogicDef& logic, const Bisequent& b,
                                               int max_atoms = kDefaultMaxAtoms);

}  // namespace bsc
