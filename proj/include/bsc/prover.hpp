#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bsc/bisequent.hpp"
#include "bsc/calculus.hpp"
#include "bsc/logics.hpp"

namespace bsc {

enum class GoalMode {
  Designated1,       // G => phi | =>
  Designated2,       // => | G => phi
  NoCounterexample,  // G => | => phi
  Liberal,           // => phi | G =>
};

std::string_view mode_name(GoalMode m);
// The designated mode matching the logic's goal sequent.
GoalMode designated_mode(const LogicDef& logic);
Bisequent goal_bisequent(GoalMode mode, const std::vector<Formula>& premisses,
                         const Formula& conclusion);

enum class Strategy {
  Leftmost,   // first compound occurrence in slot order ant1, suc1, ant2, suc2
  Rightmost,  // last compound occurrence in the reverse order
};

enum class LeafStatus { Internal, Axiomatic, Open };

struct AppliedRule {
  std::string name;
  Occurrence occurrence;
};

struct ProofNode {
  Bisequent node;
  std::optional<AppliedRule> rule;
  std::vector<std::shared_ptr<const ProofNode>> children;
  LeafStatus status = LeafStatus::Open;
  bool closed = false;  // every leaf below is axiomatic
  std::size_t height = 0;
};
using ProofTree = std::shared_ptr<const ProofNode>;

struct SearchResult {
  bool proved = false;
  Bisequent root;
  ProofTree tree;
  std::optional<Assignment> countermodel;  // set iff !proved
};

// Expands every compound occurrence that some rule covers; leaves are atomic
// or carry only formulas closed by an axiom schema. Identical sub-bisequents
// share one subtree.
ProofTree complete_search(const LogicDef& logic, const Bisequent& b,
                          Strategy strategy = Strategy::Leftmost);

SearchResult prove_bisequent(const LogicDef& logic, const Bisequent& b,
                             Strategy strategy = Strategy::Leftmost);
SearchResult prove(const LogicDef& logic, GoalMode mode, const std::vector<Formula>& premisses,
                   const Formula& conclusion, Strategy strategy = Strategy::Leftmost);

std::vector<Bisequent> open_leaves(const ProofTree& tree);
std::vector<Bisequent> leaves(const ProofTree& tree);
std::size_t tree_size(const ProofTree& tree);

// G -> 1; S -> 0; remaining atoms in both D and P -> u; D only -> 0; P only -> 1.
Assignment countermodel_from_leaf(const Bisequent& leaf);
// As above, with atoms of root missing from the leaf set to u.
Assignment countermodel_from_leaf(const Bisequent& leaf, const Bisequent& root);

// Indented text rendering with rule names.
std::string render_tree(const ProofTree& tree);

// Compositional decision procedure. Rules are context independent, so the
// leaves of a complete search tree are the slot-wise unions of the leaves of
// each root formula decomposed on its own. Per-formula leaves are cached as
// bitmask clauses over a fixed atom universe and combined on demand.
class ClauseEngine {
 public:
  struct Clause {
    std::array<std::uint64_t, 4> m{};
    bool operator==(const Clause&) const = default;
  };
  static constexpr std::size_t kMaxAtoms = 61;

  ClauseEngine(const LogicDef& logic, std::vector<std::string> atom_universe);

  const LogicDef& logic() const { return *logic_; }
  bool axiomatic(const Clause& c) const;
  // Open leaves of f decomposed alone in slot s; axiomatic leaves dropped.
  const std::vector<Clause>& clauses(const Formula& f, Slot s);
  // First open leaf of the complete search tree of b, if any.
  std::optional<Clause> first_open(const Bisequent& b);
  bool provable(const Bisequent& b) { return !first_open(b); }

  Bisequent to_bisequent(const Clause& c) const;
  Assignment countermodel(const Clause& leaf, const std::vector<std::string>& root_atoms) const;

 private:
  int atom_bit(const std::string& name) const;
  std::vector<Clause> product(const std::vector<Clause>& a, const std::vector<Clause>& b) const;
  void normalize(std::vector<Clause>& cs) const;

  const LogicDef* logic_;
  std::vector<std::string> atoms_;
  std::uint64_t top_, bottom_, undef_;
  std::unordered_map<Formula, std::array<std::optional<std::vector<Clause>>, 4>> memo_;
};

struct Decision {
  bool proved = false;
  std::optional<Bisequent> open_leaf;
  std::optional<Assignment> countermodel;
};

Decision decide(const LogicDef& logic, const Bisequent& b);
Decision decide(const LogicDef& logic, GoalMode mode, const std::vector<Formula>& premisses,
                const Formula& conclusion);

// Re-proves `proved` with `additions` joined slot-wise.
SearchResult admissible_weaken(const LogicDef& logic, const Bisequent& proved,
                               const Bisequent& additions);

enum class CutVariant { Cut1, Cut2 };
// Cut1: cut formula in suc1 of left and ant1 of right; Cut2: suc2 of left, ant2 of right.
Bisequent cut_conclusion(const Bisequent& left, const Bisequent& right, const Formula& cut,
                         CutVariant variant);
SearchResult admissible_cut(const LogicDef& logic, const Bisequent& left, const Bisequent& right,
                            const Formula& cut, CutVariant variant);

}  // namespace bsc
