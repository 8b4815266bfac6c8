#include "bsc/interpolation.hpp"

#include <algorithm>
#include <optional>

#include "bsc/error.hpp"
#include "bsc/prover.hpp"
#include "bsc/semantics.hpp"

namespace bsc {

namespace {

bool meets(const std::set<std::string>& a, const std::set<std::string>& b) {
  for (const auto& x : a)
    if (b.count(x)) return true;
  return false;
}

std::set<std::string> meet(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<LeafData> open_leaf_data(const LogicDef& logic, const Bisequent& root) {
  std::vector<LeafData> out;
  for (const auto& leaf : open_leaves(complete_search(logic, root))) {
    if (!is_atomic(leaf))
      throw Error(ErrorKind::Precondition, "nonatomic open leaf " + render(leaf));
    out.push_back(leaf_data(leaf));
  }
  return out;
}

// Folds fs with a binary connective; nullopt for an empty list.
std::optional<Formula> fold(Connective c, const std::vector<Formula>& fs) {
  if (fs.empty()) return std::nullopt;
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::binary(c, acc, fs[i]);
  return acc;
}

std::vector<Formula> atoms_of(const std::set<std::string>& s, bool negate) {
  std::vector<Formula> out;
  for (const auto& a : s) {
    Formula f = Formula::atom(a);
    out.push_back(negate ? Formula::unary(Connective::Neg, f) : f);
  }
  return out;
}

void append(std::vector<Formula>& to, const std::vector<Formula>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

LeafData leaf_data(const Bisequent& leaf) {
  LeafData d;
  for (Slot s : kSlots)
    for (const auto& f : leaf[s])
      if (f.is_atom()) d.atoms[static_cast<int>(s)].insert(f.name());
  return d;
}

bool combined_leaf_check(const std::vector<LeafData>& phi_leaves,
                         const std::vector<LeafData>& psi_leaves) {
  for (const auto& l : phi_leaves) {
    for (const auto& r : psi_leaves) {
      std::array<std::set<std::string>, 4> u;
      for (int k = 0; k < 4; ++k) {
        u[k] = l.atoms[k];
        u[k].insert(r.atoms[k].begin(), r.atoms[k].end());
      }
      if (!meets(u[0], u[1]) && !meets(u[0], u[3]) && !meets(u[2], u[3])) return false;
    }
  }
  return true;
}

std::vector<PrimedSets> primed_sets(const std::vector<LeafData>& phi_leaves,
                                    const std::vector<LeafData>& psi_leaves) {
  std::set<std::string> theta, lambda, xi, omega;
  for (const auto& r : psi_leaves) {
    theta.insert(r.atoms[0].begin(), r.atoms[0].end());
    lambda.insert(r.atoms[1].begin(), r.atoms[1].end());
    xi.insert(r.atoms[2].begin(), r.atoms[2].end());
    omega.insert(r.atoms[3].begin(), r.atoms[3].end());
  }
  std::set<std::string> lambda_omega = lambda, theta_xi = theta;
  lambda_omega.insert(omega.begin(), omega.end());
  theta_xi.insert(xi.begin(), xi.end());
  std::vector<PrimedSets> out;
  for (const auto& l : phi_leaves)
    out.push_back({meet(l.atoms[0], lambda_omega), meet(l.atoms[1], theta),
                   meet(l.atoms[2], omega), meet(l.atoms[3], theta_xi)});
  return out;
}

Interpolation interpolate_detailed(const LogicDef& logic, const Formula& phi, const Formula& psi) {
  static const std::set<std::string> kSupported{"I1", "I2", "P1", "P2"};
  if (!kSupported.count(logic.name))
    throw Error(ErrorKind::Precondition, "interpolation is available for I1, I2, P1, P2 only");
  if (!matrix_consequence(logic, {phi}, psi))
    throw Error(ErrorKind::NotEntailed, render(phi) + " does not entail " + render(psi) + " in " + logic.name);

  bool first = logic.goal == GoalSequent::First;
  Bisequent phi_root = first ? Bisequent({phi}, {}, {}, {}) : Bisequent({}, {}, {phi}, {});
  Bisequent psi_root = first ? Bisequent({}, {psi}, {}, {}) : Bisequent({}, {}, {}, {psi});
  Interpolation out{phi, open_leaf_data(logic, phi_root), open_leaf_data(logic, psi_root), {}};
  if (out.phi_leaves.empty() || out.psi_leaves.empty())
    throw Error(ErrorKind::NotContingent, "both formulas must be contingent");
  if (!combined_leaf_check(out.phi_leaves, out.psi_leaves))
    throw Error(ErrorKind::Precondition, "combined leaves are not all axiomatic");
  out.primed = primed_sets(out.phi_leaves, out.psi_leaves);

  std::vector<Formula> disjuncts;
  for (const auto& p : out.primed) {
    if (p.empty())
      throw Error(ErrorKind::NoSharedAtom, "a leaf contributes no shared atom");
    // I-logics: /\G' & /\~S' & ~(\/~P' | \/D'). P-logics swap G<->P and D<->S.
    const auto& pos = first ? p.gamma : p.pi;
    const auto& negs = first ? p.sigma : p.delta;
    const auto& inner_neg = first ? p.pi : p.gamma;
    const auto& inner = first ? p.delta : p.sigma;
    std::vector<Formula> conj = atoms_of(pos, false);
    append(conj, atoms_of(negs, true));
    std::vector<Formula> inside = atoms_of(inner_neg, true);
    append(inside, atoms_of(inner, false));
    // A lone disjunct is doubled: the closing step needs the or-rule that moves
    // the disjuncts across the bar, and a bare literal would stay put.
    if (inside.size() == 1) inside.push_back(inside.front());
    if (auto d = fold(Connective::Or, inside)) conj.push_back(Formula::unary(Connective::Neg, *d));
    disjuncts.push_back(*fold(Connective::And, conj));
  }
  out.interpolant = *fold(Connective::Or, disjuncts);
  return out;
}

Formula interpolate(const LogicDef& logic, const Formula& phi, const Formula& psi) {
  return interpolate_detailed(logic, phi, psi).interpolant;
}

bool verify_interpolant(const LogicDef& logic, const Formula& phi, const Formula& psi,
                        const Formula& candidate) {
  auto shared = meet(atoms(phi), atoms(psi));
  for (const auto& a : atoms(candidate))
    if (!shared.count(a)) return false;
  GoalMode mode = designated_mode(logic);
  for (auto [lhs, rhs] : {std::pair{phi, candidate}, std::pair{candidate, psi}}) {
    bool oracle = matrix_consequence(logic, {lhs}, rhs);
    bool prover = prove(logic, mode, {lhs}, rhs).proved;
    if (!oracle || !prover) return false;
  }
  return true;
}

}  // namespace bsc
