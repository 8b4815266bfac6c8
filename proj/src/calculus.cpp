#include "bsc/calculus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>

#include "bsc/error.hpp"
#include "bsc/semantics.hpp"

namespace bsc {

namespace {

// Value sets a premiss can impose on one argument, with the placements doing it.
struct Expressible {
  std::uint8_t values;  // bit i = Value(i)
  std::vector<Slot> slots;
};

constexpr std::uint8_t bit(Value v) { return 1u << static_cast<int>(v); }

const std::array<Expressible, 6>& expressible() {
  static const std::array<Expressible, 6> sets{{
      {bit(Value::One), {Slot::Ant1}},
      {static_cast<std::uint8_t>(bit(Value::Zero) | bit(Value::Undef)), {Slot::Suc1}},
      {static_cast<std::uint8_t>(bit(Value::Undef) | bit(Value::One)), {Slot::Ant2}},
      {bit(Value::Zero), {Slot::Suc2}},
      {bit(Value::Undef), {Slot::Suc1, Slot::Ant2}},
      {0b111, {}},
  }};
  return sets;
}

int cell(const TruthTable& t, Value a, Value b) {
  return t.arity == 1 ? static_cast<int>(a) : 3 * static_cast<int>(a) + static_cast<int>(b);
}

Value apply(const TruthTable& t, Value a, Value b) { return t.arity == 1 ? t(a) : t(a, b); }

bool premiss_holds(const PremissSchema& p, Value a, Value b) {
  for (const auto& pl : p.placements)
    if (!slot_constraint(pl.slot, pl.arg_index == 0 ? a : b)) return false;
  return true;
}

struct Rect {
  std::uint16_t cells;
  int placements;
  PremissSchema premiss;
};

}  // namespace

Catalog catalog(const LogicDef& logic) {
  auto missing = logic.uncovered();
  if (!missing.empty()) {
    std::string what = "logic " + logic.name + " has no rule for";
    for (auto [c, s] : missing)
      what += " '" + std::string(token(c)) + "'@" + std::string(slot_name(s));
    throw Error(ErrorKind::IncompleteCatalog, what);
  }
  return {logic.rules(), logic.extra_axioms()};
}

std::vector<Bisequent> apply_rule(const RuleSchema& rule, const Bisequent& b, Occurrence occ) {
  const auto& slot = b[occ.slot];
  if (occ.slot != rule.principal_slot || occ.index >= slot.size())
    throw Error(ErrorKind::OccurrenceMismatch,
                "rule " + rule.name + " does not apply at " + std::string(slot_name(occ.slot)) +
                    "[" + std::to_string(occ.index) + "]");
  const Formula& f = slot[occ.index];
  if (!f.is_compound() || f.connective() != rule.connective)
    throw Error(ErrorKind::OccurrenceMismatch,
                "rule " + rule.name + " does not match principal formula " + render(f));
  Bisequent ctx = b;
  ctx[occ.slot].erase(ctx[occ.slot].begin() + static_cast<std::ptrdiff_t>(occ.index));
  std::vector<Bisequent> out;
  out.reserve(rule.premisses.size());
  for (const auto& p : rule.premisses) {
    Bisequent prem = ctx;
    for (const auto& pl : p.placements) prem[pl.slot].push_back(f.arg(pl.arg_index));
    out.push_back(std::move(prem));
  }
  return out;
}

RuleVerdict verify_rule_schema(const TruthTable& table, const RuleSchema& rule) {
  for (Value a : kTableOrder) {
    for (Value b : kTableOrder) {
      bool conclusion = slot_constraint(rule.principal_slot, apply(table, a, b));
      bool premiss = std::any_of(rule.premisses.begin(), rule.premisses.end(),
                                 [&](const PremissSchema& p) { return premiss_holds(p, a, b); });
      if (conclusion != premiss) {
        if (table.arity == 1) return {false, {a}};
        return {false, {a, b}};
      }
      if (table.arity == 1) break;
    }
  }
  return {};
}

RuleVerdict verify_rule_schema(const LogicDef& logic, const RuleSchema& rule) {
  return verify_rule_schema(logic.table(rule.connective), rule);
}

bool verify_axiom_schema(const TruthTable& table, Slot slot) {
  for (Value a : kValues)
    for (Value b : kValues)
      if (slot_constraint(slot, apply(table, a, b))) return false;
  return true;
}

SynthesisResult synthesize_rules(const TruthTable& table, Slot slot, Connective connective) {
  std::uint16_t region = 0;
  for (Value a : kValues)
    for (Value b : kValues)
      if (slot_constraint(slot, apply(table, a, b))) region |= 1u << cell(table, a, b);
  if (region == 0) return AxiomSchema{connective, slot};

  // Candidate premisses: rectangles inside the region, minus dominated ones.
  const auto& ex = expressible();
  std::vector<Rect> cand;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    for (std::size_t j = 0; j < (table.arity == 2 ? ex.size() : 1); ++j) {
      if (i + 1 == ex.size() && (table.arity == 1 || j + 1 == ex.size())) continue;
      std::uint16_t cells = 0;
      for (Value a : kValues) {
        if (!(ex[i].values & bit(a))) continue;
        for (Value b : kValues)
          if (table.arity == 1 || (ex[j].values & bit(b))) cells |= 1u << cell(table, a, b);
      }
      if ((cells & ~region) != 0) continue;
      Rect r{cells, 0, {}};
      for (Slot s : ex[i].slots) r.premiss.placements.push_back({s, 0});
      if (table.arity == 2)
        for (Slot s : ex[j].slots) r.premiss.placements.push_back({s, 1});
      r.placements = static_cast<int>(r.premiss.placements.size());
      cand.push_back(std::move(r));
    }
  }
  std::vector<Rect> kept;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cand.size() && !dominated; ++j) {
      if (i == j) continue;
      bool sub = (cand[i].cells & ~cand[j].cells) == 0;
      bool better = cand[j].placements < cand[i].placements ||
                    (cand[j].placements == cand[i].placements &&
                     (cand[j].cells != cand[i].cells || j < i));
      dominated = sub && better;
    }
    if (!dominated) kept.push_back(cand[i]);
  }

  // Iterative deepening over subset size; first found per size in index order,
  // keeping the one with fewest placements.
  std::vector<std::size_t> best, cur;
  int best_cost = 1 << 30;
  std::function<void(std::size_t, std::size_t, std::uint16_t, int)> search =
      [&](std::size_t from, std::size_t left, std::uint16_t covered, int cost) {
        if (left == 0) {
          if (covered == region && cost < best_cost) {
            best_cost = cost;
            best = cur;
          }
          return;
        }
        for (std::size_t i = from; i < kept.size(); ++i) {
          cur.push_back(i);
          search(i + 1, left - 1, covered | kept[i].cells, cost + kept[i].placements);
          cur.pop_back();
        }
      };
  for (std::size_t k = 1; k <= kept.size() && best.empty(); ++k) search(0, k, 0, 0);
  if (best.empty()) throw Error(ErrorKind::Precondition, "no cover found");

  RuleSchema r;
  r.name = "(" + table.name + "@" + std::string(slot_name(slot)) + ")";
  r.connective = connective;
  r.arity = table.arity;
  r.principal_slot = slot;
  for (std::size_t i : best) r.premisses.push_back(kept[i].premiss);
  return r;
}

SynthesisResult synthesize_rules(const TruthTable& table, Slot slot) {
  return synthesize_rules(table, slot, table.arity == 1 ? Connective::Neg : Connective::And);
}

}  // namespace bsc
