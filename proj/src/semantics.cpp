#include "bsc/semantics.hpp"

#include <algorithm>
#include <set>

#include "bsc/error.hpp"

namespace bsc {

namespace {

std::vector<std::string> atom_order_of(const std::vector<Formula>& fs) {
  std::set<std::string> s;
  for (const auto& f : fs) collect_atoms(f, s);
  return {s.begin(), s.end()};
}

void check_cap(std::size_t n, int max_atoms) {
  if (static_cast<int>(n) > max_atoms)
    throw Error(ErrorKind::Resource, std::to_string(n) + " atoms exceed the cap of " +
                                         std::to_string(max_atoms));
}

Assignment to_assignment(const std::vector<std::string>& order, const std::vector<Value>& h) {
  Assignment a;
  for (std::size_t i = 0; i < order.size(); ++i) a.emplace(order[i], h[i]);
  return a;
}

// Shared enumeration for bisequent validity: calls hit for each falsifier.
void scan_falsifiers(const LogicDef& logic, const Bisequent& b, int max_atoms,
                     const std::function<bool(const std::vector<std::string>&,
                                              const std::vector<Value>&)>& hit) {
  auto as = atoms(b);
  std::vector<std::string> order(as.begin(), as.end());
  check_cap(order.size(), max_atoms);
  std::vector<std::pair<Slot, CompiledFormula>> progs;
  for (Slot s : kSlots)
    for (const auto& f : b[s]) progs.emplace_back(s, CompiledFormula(logic, f, order));
  for_each_assignment(order.size(), [&](const std::vector<Value>& h) {
    for (const auto& [s, p] : progs)
      if (!slot_constraint(s, p(h))) return true;
    return hit(order, h);
  });
}

}  // namespace

CompiledFormula::CompiledFormula(const LogicDef& logic, const Formula& f,
                                 const std::vector<std::string>& atom_order) {
  std::function<void(const Formula&)> emit = [&](const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::Atom: {
        auto it = std::lower_bound(atom_order.begin(), atom_order.end(), g.name());
        if (it == atom_order.end() || *it != g.name())
          throw Error(ErrorKind::MissingAtom, "no value for atom " + g.name());
        code_.push_back({nullptr, static_cast<int>(it - atom_order.begin()), Value::Zero});
        return;
      }
      case Formula::Kind::Constant:
        if (!logic.constants_enabled)
          throw Error(ErrorKind::UnknownConnective, "constants are not enabled in " + logic.name);
        code_.push_back({nullptr, -1,
                         g.constant_kind() == ConstantKind::Top      ? Value::One
                         : g.constant_kind() == ConstantKind::Bottom ? Value::Zero
                                                                     : Value::Undef});
        return;
      case Formula::Kind::Compound:
        for (const auto& a : g.args()) emit(a);
        code_.push_back({&logic.table(g.connective()), -1, Value::Zero});
    }
  };
  emit(f);
}

Value CompiledFormula::operator()(const std::vector<Value>& h) const {
  Value stack[64]{};
  std::vector<Value> big;
  Value* st = stack;
  if (code_.size() > 64) {
    big.resize(code_.size());
    st = big.data();
  }
  int top = 0;
  for (const Op& op : code_) {
    if (!op.table) {
      st[top++] = op.atom >= 0 ? h[op.atom] : op.constant;
    } else if (op.table->arity == 1) {
      st[top - 1] = (*op.table)(st[top - 1]);
    } else {
      st[top - 2] = (*op.table)(st[top - 2], st[top - 1]);
      --top;
    }
  }
  return st[0];
}

void for_each_assignment(std::size_t n, const std::function<bool(const std::vector<Value>&)>& visit) {
  std::vector<Value> h(n, Value::Zero);
  for (;;) {
    if (!visit(h)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (h[i] != Value::One) {
        h[i] = static_cast<Value>(static_cast<int>(h[i]) + 1);
        break;
      }
      h[i] = Value::Zero;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::optional<Assignment> consequence_counterexample(const LogicDef& logic,
                                                     const std::vector<Formula>& premisses,
                                                     const Formula& conclusion, int max_atoms) {
  std::vector<Formula> all = premisses;
  all.push_back(conclusion);
  auto order = atom_order_of(all);
  check_cap(order.size(), max_atoms);
  std::vector<CompiledFormula> ps;
  for (const auto& f : premisses) ps.emplace_back(logic, f, order);
  CompiledFormula c(logic, conclusion, order);
  std::optional<Assignment> found;
  for_each_assignment(order.size(), [&](const std::vector<Value>& h) {
    for (const auto& p : ps)
      if (!logic.is_designated(p(h))) return true;
    if (logic.is_designated(c(h))) return true;
    found = to_assignment(order, h);
    return false;
  });
  return found;
}

bool matrix_consequence(const LogicDef& logic, const std::vector<Formula>& premisses,
                        const Formula& conclusion, int max_atoms) {
  return !consequence_counterexample(logic, premisses, conclusion, max_atoms);
}

bool matrix_consequence(const ConsequenceQuery& q, int max_atoms) {
  return matrix_consequence(q.logic, q.premisses, q.conclusion, max_atoms);
}

bool slot_constraint(Slot s, Value v) {
  switch (s) {
    case Slot::Ant1: return v == Value::One;
    case Slot::Suc1: return v != Value::One;
    case Slot::Ant2: return v != Value::Zero;
    case Slot::Suc2: return v == Value::Zero;
  }
  return false;
}

bool falsifies(const LogicDef& logic, const Assignment& h, const Bisequent& b) {
  for (Slot s : kSlots)
    for (const auto& f : b[s])
      if (!slot_constraint(s, eval(logic, h, f))) return false;
  return true;
}

bool bisequent_valid(const LogicDef& logic, const Bisequent& b, int max_atoms) {
  bool valid = true;
  scan_falsifiers(logic, b, max_atoms, [&](const auto&, const auto&) {
    valid = false;
    return false;
  });
  return valid;
}

std::vector<Assignment> falsifying_assignments(const LogicDef& logic, const Bisequent& b,
                                               int max_atoms) {
  std::vector<Assignment> out;
  scan_falsifiers(logic, b, max_atoms, [&](const auto& order, const auto& h) {
    out.push_back(to_assignment(order, h));
    return true;
  });
  return out;
}

}  // namespace bsc
