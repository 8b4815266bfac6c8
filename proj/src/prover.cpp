#include "bsc/prover.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bsc/error.hpp"
#include "bsc/semantics.hpp"

namespace bsc {

namespace {

std::optional<Occurrence> select_principal(const LogicDef& logic, const Bisequent& b,
                                           Strategy strategy) {
  auto usable = [&](Slot s, const Formula& f) {
    if (!f.is_compound()) return false;
    if (logic.rule_for(f.connective(), s)) return true;
    if (logic.axiom_covers(f.connective(), s)) return false;
    throw Error(ErrorKind::IncompleteCatalog,
                "logic " + logic.name + " has no rule for '" + std::string(token(f.connective())) +
                    "' in " + std::string(slot_name(s)));
  };
  if (strategy == Strategy::Leftmost) {
    for (Slot s : kSlots)
      for (std::size_t i = 0; i < b[s].size(); ++i)
        if (usable(s, b[s][i])) return Occurrence{s, i};
  } else {
    for (auto it = kSlots.rbegin(); it != kSlots.rend(); ++it)
      for (std::size_t i = b[*it].size(); i-- > 0;)
        if (usable(*it, b[*it][i])) return Occurrence{*it, i};
  }
  return std::nullopt;
}

class Searcher {
 public:
  Searcher(const LogicDef& logic, Strategy strategy) : logic_(logic), strategy_(strategy) {}

  ProofTree run(const Bisequent& b) {
    std::string key = render(canonical(b));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto node = std::make_shared<ProofNode>();
    node->node = b;
    auto occ = select_principal(logic_, b, strategy_);
    if (!occ) {
      node->status = is_axiomatic(logic_, b) ? LeafStatus::Axiomatic : LeafStatus::Open;
      node->closed = node->status == LeafStatus::Axiomatic;
    } else {
      const Formula& f = b[occ->slot][occ->index];
      const RuleSchema& rule = *logic_.rule_for(f.connective(), occ->slot);
      node->status = LeafStatus::Internal;
      node->rule = AppliedRule{rule.name, *occ};
      node->closed = true;
      for (const auto& prem : apply_rule(rule, b, *occ)) {
        auto child = run(prem);
        node->closed = node->closed && child->closed;
        node->height = std::max(node->height, child->height + 1);
        node->children.push_back(std::move(child));
      }
    }
    memo_.emplace(std::move(key), node);
    return node;
  }

 private:
  const LogicDef& logic_;
  Strategy strategy_;
  std::unordered_map<std::string, ProofTree> memo_;
};

void collect_leaves(const ProofTree& t, bool only_open, std::vector<Bisequent>& out) {
  if (t->children.empty()) {
    if (!only_open || t->status == LeafStatus::Open) out.push_back(t->node);
    return;
  }
  for (const auto& c : t->children)
    if (!only_open || !c->closed) collect_leaves(c, only_open, out);
}

std::vector<std::string> sorted_atoms(const Bisequent& b) {
  auto s = atoms(b);
  return {s.begin(), s.end()};
}

}  // namespace

std::string_view mode_name(GoalMode m) {
  switch (m) {
    case GoalMode::Designated1: return "designated_1";
    case GoalMode::Designated2: return "designated_2";
    case GoalMode::NoCounterexample: return "no_counterexample";
    case GoalMode::Liberal: return "liberal";
  }
  return "?";
}

GoalMode designated_mode(const LogicDef& logic) {
  return logic.goal == GoalSequent::First ? GoalMode::Designated1 : GoalMode::Designated2;
}

Bisequent goal_bisequent(GoalMode mode, const std::vector<Formula>& premisses,
                         const Formula& conclusion) {
  switch (mode) {
    case GoalMode::Designated1: return {premisses, {conclusion}, {}, {}};
    case GoalMode::Designated2: return {{}, {}, premisses, {conclusion}};
    case GoalMode::NoCounterexample: return {premisses, {}, {}, {conclusion}};
    case GoalMode::Liberal: return {{}, {conclusion}, premisses, {}};
  }
  return {};
}

ProofTree complete_search(const LogicDef& logic, const Bisequent& b, Strategy strategy) {
  return Searcher(logic, strategy).run(b);
}

SearchResult prove_bisequent(const LogicDef& logic, const Bisequent& b, Strategy strategy) {
  SearchResult r;
  r.root = b;
  r.tree = complete_search(logic, b, strategy);
  r.proved = r.tree->closed;
  if (!r.proved) {
    const ProofNode* n = r.tree.get();
    while (!n->children.empty()) {
      auto it = std::find_if(n->children.begin(), n->children.end(),
                             [](const ProofTree& c) { return !c->closed; });
      n = it->get();
    }
    r.countermodel = countermodel_from_leaf(n->node, b);
  }
  return r;
}

SearchResult prove(const LogicDef& logic, GoalMode mode, const std::vector<Formula>& premisses,
                   const Formula& conclusion, Strategy strategy) {
  if ((mode == GoalMode::Designated1 && logic.goal != GoalSequent::First) ||
      (mode == GoalMode::Designated2 && logic.goal != GoalSequent::Second))
    throw Error(ErrorKind::ModeMismatch, std::string(mode_name(mode)) + " does not match " +
                                             logic.name + "'s designated set");
  return prove_bisequent(logic, goal_bisequent(mode, premisses, conclusion), strategy);
}

std::vector<Bisequent> open_leaves(const ProofTree& tree) {
  std::vector<Bisequent> out;
  collect_leaves(tree, true, out);
  return out;
}

std::vector<Bisequent> leaves(const ProofTree& tree) {
  std::vector<Bisequent> out;
  collect_leaves(tree, false, out);
  return out;
}

std::size_t tree_size(const ProofTree& tree) {
  std::size_t n = 1;
  for (const auto& c : tree->children) n += tree_size(c);
  return n;
}

Assignment countermodel_from_leaf(const Bisequent& leaf) {
  if (!is_atomic(leaf) || has_identity_clash(leaf))
    throw Error(ErrorKind::Precondition, "countermodel needs an atomic nonaxiomatic leaf: " + render(leaf));
  auto in = [&](Slot s, const std::string& a) {
    const auto& v = leaf[s];
    return std::any_of(v.begin(), v.end(), [&](const Formula& f) { return f.is_atom() && f.name() == a; });
  };
  Assignment h;
  for (const auto& a : atoms(leaf)) {
    Value v = Value::Undef;
    if (in(Slot::Ant1, a)) v = Value::One;
    else if (in(Slot::Suc2, a)) v = Value::Zero;
    else if (in(Slot::Suc1, a) && in(Slot::Ant2, a)) v = Value::Undef;
    else if (in(Slot::Suc1, a)) v = Value::Zero;
    else if (in(Slot::Ant2, a)) v = Value::One;
    h[a] = v;
  }
  return h;
}

Assignment countermodel_from_leaf(const Bisequent& leaf, const Bisequent& root) {
  Assignment h = countermodel_from_leaf(leaf);
  for (const auto& a : atoms(root)) h.emplace(a, Value::Undef);
  return h;
}

std::string render_tree(const ProofTree& tree) {
  std::string out;
  std::function<void(const ProofTree&, int)> walk = [&](const ProofTree& t, int depth) {
    out.append(2 * depth, ' ');
    out += render(t->node);
    if (t->rule) out += "    by " + t->rule->name;
    else out += t->status == LeafStatus::Axiomatic ? "    axiom" : "    OPEN";
    out += '\n';
    for (const auto& c : t->children) walk(c, depth + 1);
  };
  walk(tree, 0);
  return out;
}

// --- ClauseEngine ----------------------------------------------------------

ClauseEngine::ClauseEngine(const LogicDef& logic, std::vector<std::string> atom_universe)
    : logic_(&logic), atoms_(std::move(atom_universe)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() > kMaxAtoms)
    throw Error(ErrorKind::Resource, "clause engine supports at most 61 atoms");
  std::size_t n = atoms_.size();
  top_ = 1ULL << n;
  bottom_ = 1ULL << (n + 1);
  undef_ = 1ULL << (n + 2);
}

int ClauseEngine::atom_bit(const std::string& name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name)
    throw Error(ErrorKind::MissingAtom, "atom " + name + " is outside the clause universe");
  return static_cast<int>(it - atoms_.begin());
}

bool ClauseEngine::axiomatic(const Clause& c) const {
  const auto& [g, d, p, s] = c.m;
  if ((g & d) | (g & s) | (p & s)) return true;
  if (logic_->constants_enabled)
    return ((d | s) & top_) | ((g | p) & bottom_) | ((g | s) & undef_);
  return false;
}

void ClauseEngine::normalize(std::vector<Clause>& cs) const {
  std::erase_if(cs, [&](const Clause& c) { return axiomatic(c); });
  // A clause containing another is closed whenever the smaller one is.
  auto subset = [](const Clause& a, const Clause& b) {
    for (int i = 0; i < 4; ++i)
      if (a.m[i] & ~b.m[i]) return false;
    return true;
  };
  std::vector<Clause> kept;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < cs.size() && !redundant; ++j) {
      if (i == j || !subset(cs[j], cs[i])) continue;
      redundant = !(cs[j] == cs[i]) || j < i;
    }
    if (!redundant) kept.push_back(cs[i]);
  }
  cs = std::move(kept);
}

std::vector<ClauseEngine::Clause> ClauseEngine::product(const std::vector<Clause>& a,
                                                        const std::vector<Clause>& b) const {
  std::vector<Clause> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Clause z;
      for (int i = 0; i < 4; ++i) z.m[i] = x.m[i] | y.m[i];
      if (!axiomatic(z)) out.push_back(z);
    }
  return out;
}

const std::vector<ClauseEngine::Clause>& ClauseEngine::clauses(const Formula& f, Slot s) {
  auto& slot_cache = memo_[f][static_cast<int>(s)];
  if (slot_cache) return *slot_cache;
  std::vector<Clause> result;
  if (f.is_atomic()) {
    Clause c;
    c.m[static_cast<int>(s)] =
        f.is_atom() ? 1ULL << atom_bit(f.name())
        : f.constant_kind() == ConstantKind::Top    ? top_
        : f.constant_kind() == ConstantKind::Bottom ? bottom_
                                                    : undef_;
    if (!axiomatic(c)) result.push_back(c);
  } else if (const RuleSchema* rule = logic_->rule_for(f.connective(), s)) {
    for (const auto& prem : rule->premisses) {
      std::vector<Clause> acc{Clause{}};
      for (const auto& pl : prem.placements) {
        acc = product(acc, clauses(f.arg(pl.arg_index), pl.slot));
        if (acc.empty()) break;
      }
      result.insert(result.end(), acc.begin(), acc.end());
    }
    normalize(result);
  } else if (!logic_->axiom_covers(f.connective(), s)) {
    throw Error(ErrorKind::IncompleteCatalog,
                "logic " + logic_->name + " has no rule for '" + std::string(token(f.connective())) +
                    "' in " + std::string(slot_name(s)));
  }
  // The reference may have been invalidated by recursive insertions.
  auto& cache = memo_[f][static_cast<int>(s)];
  cache = std::move(result);
  return *cache;
}

std::optional<ClauseEngine::Clause> ClauseEngine::first_open(const Bisequent& b) {
  std::vector<const std::vector<Clause>*> lists;
  for (Slot s : kSlots)
    for (const auto& f : b[s]) {
      const auto& cs = clauses(f, s);
      if (cs.empty()) return std::nullopt;
      lists.push_back(&cs);
    }
  std::stable_sort(lists.begin(), lists.end(),
                   [](const auto* x, const auto* y) { return x->size() < y->size(); });
  std::optional<Clause> found;
  std::function<bool(std::size_t, const Clause&)> dfs = [&](std::size_t k, const Clause& acc) {
    if (k == lists.size()) {
      found = acc;
      return true;
    }
    for (const auto& c : *lists[k]) {
      Clause z;
      for (int i = 0; i < 4; ++i) z.m[i] = acc.m[i] | c.m[i];
      if (!axiomatic(z) && dfs(k + 1, z)) return true;
    }
    return false;
  };
  dfs(0, Clause{});
  return found;
}

Bisequent ClauseEngine::to_bisequent(const Clause& c) const {
  Bisequent b;
  for (Slot s : kSlots) {
    auto bits = c.m[static_cast<int>(s)];
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (bits >> i & 1u) b[s].push_back(Formula::atom(atoms_[i]));
    if (bits & top_) b[s].push_back(Formula::constant(ConstantKind::Top));
    if (bits & bottom_) b[s].push_back(Formula::constant(ConstantKind::Bottom));
    if (bits & undef_) b[s].push_back(Formula::constant(ConstantKind::Undef));
  }
  return b;
}

Assignment ClauseEngine::countermodel(const Clause& leaf,
                                      const std::vector<std::string>& root_atoms) const {
  const auto& [g, d, p, s] = leaf.m;
  Assignment h;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    std::uint64_t b = 1ULL << i;
    if (!((g | d | p | s) & b)) continue;
    Value v = (g & b)             ? Value::One
              : (s & b)           ? Value::Zero
              : (d & b) && (p & b) ? Value::Undef
              : (d & b)           ? Value::Zero
                                  : Value::One;
    h[atoms_[i]] = v;
  }
  for (const auto& a : root_atoms) h.emplace(a, Value::Undef);
  return h;
}

Decision decide(const LogicDef& logic, const Bisequent& b) {
  auto order = sorted_atoms(b);
  Decision d;
  if (order.size() > ClauseEngine::kMaxAtoms) {
    auto r = prove_bisequent(logic, b);
    d.proved = r.proved;
    if (!r.proved) {
      d.countermodel = r.countermodel;
      d.open_leaf = open_leaves(r.tree).front();
    }
    return d;
  }
  ClauseEngine engine(logic, order);
  auto open = engine.first_open(b);
  d.proved = !open;
  if (open) {
    d.open_leaf = engine.to_bisequent(*open);
    d.countermodel = engine.countermodel(*open, order);
  }
  return d;
}

Decision decide(const LogicDef& logic, GoalMode mode, const std::vector<Formula>& premisses,
                const Formula& conclusion) {
  return decide(logic, goal_bisequent(mode, premisses, conclusion));
}

SearchResult admissible_weaken(const LogicDef& logic, const Bisequent& proved,
                               const Bisequent& additions) {
  if (!decide(logic, proved).proved)
    throw Error(ErrorKind::Precondition, "weakening needs a provable bisequent");
  return prove_bisequent(logic, join(proved, additions));
}

Bisequent cut_conclusion(const Bisequent& left, const Bisequent& right, const Formula& cut,
                         CutVariant variant) {
  Slot ls = variant == CutVariant::Cut1 ? Slot::Suc1 : Slot::Suc2;
  Slot rs = variant == CutVariant::Cut1 ? Slot::Ant1 : Slot::Ant2;
  Bisequent l = left, r = right;
  auto drop = [&](std::vector<Formula>& v, const char* side) {
    auto it = std::find(v.begin(), v.end(), cut);
    if (it == v.end())
      throw Error(ErrorKind::ShapeMismatch,
                  std::string("cut formula ") + render(cut) + " missing from the " + side + " premiss");
    v.erase(it);
  };
  drop(l[ls], "left");
  drop(r[rs], "right");
  return join(l, r);
}

SearchResult admissible_cut(const LogicDef& logic, const Bisequent& left, const Bisequent& right,
                            const Formula& cut, CutVariant variant) {
  Bisequent concl = cut_conclusion(left, right, cut, variant);
  if (!decide(logic, left).proved || !decide(logic, right).proved)
    throw Error(ErrorKind::Precondition, "cut needs provable premisses");
  return prove_bisequent(logic, concl);
}

}  // namespace bsc
