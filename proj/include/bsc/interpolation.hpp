#pragma once

#include <set>
#include <string>
#include <vector>

#include "bsc/bisequent.hpp"
#include "bsc/logics.hpp"

namespace bsc {

// Atom sets of one nonaxiomatic leaf, indexed by slot.
struct LeafData {
  std::array<std::set<std::string>, 4> atoms;
};

LeafData leaf_data(const Bisequent& leaf);

// True iff every cross pair of a phi-side and a psi-side leaf clashes on an atom.
bool combined_leaf_check(const std::vector<LeafData>& phi_leaves,
                         const std::vector<LeafData>& psi_leaves);

struct PrimedSets {
  std::set<std::string> gamma, delta, pi, sigma;
  bool empty() const { return gamma.empty() && delta.empty() && pi.empty() && sigma.empty(); }
};

std::vector<PrimedSets> primed_sets(const std::vector<LeafData>& phi_leaves,
                                    const std::vector<LeafData>& psi_leaves);

struct Interpolation {
  Formula interpolant;
  std::vector<LeafData> phi_leaves;
  std::vector<LeafData> psi_leaves;
  std::vector<PrimedSets> primed;
};

// For I1, I2 (trees phi => | => and => psi | =>) and P1, P2 (trees => | phi =>
// and => | => psi).
Interpolation interpolate_detailed(const LogicDef& logic, const Formula& phi, const Formula& psi);
Formula interpolate(const LogicDef& logic, const Formula& phi, const Formula& psi);

// Atom inclusion plus both entailments, each confirmed by the matrix oracle and
// by the prover.
bool verify_interpolant(const LogicDef& logic, const Formula& phi, const Formula& psi,
                        const Formula& candidate);

}  // namespace bsc
