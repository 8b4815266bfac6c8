#include "bsc/logics.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "bsc/error.hpp"

namespace bsc {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits "head : tail" at the first " : " separator.
std::pair<std::string, std::string> split_colon(const std::string& line, const std::string& where) {
  auto k = line.find(" : ");
  if (k == std::string::npos) throw Error(ErrorKind::Catalog, where + ": expected ' : '");
  return {trim(line.substr(0, k)), trim(line.substr(k + 3))};
}

}  // namespace

std::string_view value_name(Value v) {
  switch (v) {
    case Value::Zero: return "0";
    case Value::Undef: return "u";
    case Value::One: return "1";
  }
  return "?";
}

std::optional<Value> value_from_name(std::string_view s) {
  if (s == "0") return Value::Zero;
  if (s == "u" || s == "U") return Value::Undef;
  if (s == "1") return Value::One;
  return std::nullopt;
}

std::string_view slot_name(Slot s) {
  switch (s) {
    case Slot::Ant1: return "ant1";
    case Slot::Suc1: return "suc1";
    case Slot::Ant2: return "ant2";
    case Slot::Suc2: return "suc2";
  }
  return "?";
}

std::optional<Slot> slot_from_name(std::string_view name) {
  for (Slot s : kSlots)
    if (slot_name(s) == name) return s;
  return std::nullopt;
}

std::string describe(const RuleSchema& r) {
  std::string out = r.name + " " + std::string(slot_name(r.principal_slot)) + " :";
  for (std::size_t i = 0; i < r.premisses.size(); ++i) {
    if (i) out += " ;";
    for (const auto& p : r.premisses[i].placements) {
      out += ' ';
      out += slot_name(p.slot);
      out += p.arg_index == 0 ? ":A" : ":B";
    }
  }
  return out;
}

std::vector<Value> LogicDef::designated() const {
  std::vector<Value> out;
  for (Value v : kValues)
    if (is_designated(v)) out.push_back(v);
  return out;
}

const TruthTable& LogicDef::table(Connective c) const {
  const auto& op = ops[static_cast<int>(c)];
  if (!op)
    throw Error(ErrorKind::UnknownConnective,
                "connective '" + std::string(token(c)) + "' is not part of logic " + name);
  return *op->table;
}

Signature LogicDef::signature() const {
  Signature s;
  for (int i = 0; i < kConnectiveCount; ++i)
    if (ops[i]) s.add(static_cast<Connective>(i));
  s.set_constants(constants_enabled);
  return s;
}

std::vector<std::pair<Connective, Slot>> LogicDef::uncovered() const {
  std::vector<std::pair<Connective, Slot>> out;
  for (int i = 0; i < kConnectiveCount; ++i) {
    if (!ops[i]) continue;
    auto c = static_cast<Connective>(i);
    for (Slot s : kSlots)
      if (!rule_for(c, s) && !axiom_covers(c, s)) out.emplace_back(c, s);
  }
  return out;
}

void LogicDef::finalize() {
  rules_.clear();
  axioms_.clear();
  for (auto& row : rule_index_) row.fill(-1);
  axiom_mask_.fill(0);
  for (int i = 0; i < kConnectiveCount; ++i) {
    if (!ops[i]) continue;
    auto c = static_cast<Connective>(i);
    for (const auto& r : ops[i]->rules) {
      RuleSchema bound = *r;
      bound.connective = c;
      auto& idx = rule_index_[i][static_cast<int>(bound.principal_slot)];
      if (idx >= 0)
        throw Error(ErrorKind::Catalog, "logic " + name + ": two rules for '" +
                                            std::string(token(c)) + "' in slot " +
                                            std::string(slot_name(bound.principal_slot)));
      idx = static_cast<int>(rules_.size());
      rules_.push_back(std::move(bound));
    }
    for (Slot s : ops[i]->axiom_slots) {
      axioms_.push_back({c, s});
      axiom_mask_[i] |= 1u << static_cast<int>(s);
    }
  }
}

const Registry& Registry::builtin() {
  static const Registry reg = [] {
    Registry r;
    r.load_text(builtin_tables_text(), "tables.cat");
    r.load_text(builtin_rules_text(), "rules.cat");
    r.load_text(builtin_logics_text(), "logics.cat");
    return r;
  }();
  return reg;
}

Registry Registry::with_files(const std::vector<std::string>& paths) {
  Registry r = builtin();
  for (const auto& p : paths) r.load_file(p);
  return r;
}

void Registry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Catalog, "cannot open catalog file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

void Registry::load_text(std::string_view text, std::string_view origin) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::string where = std::string(origin) + ":" + std::to_string(lineno);
    auto words = split_ws(line);
    const std::string& kind = words[0];

    if (kind == "table") {
      if (words.size() < 3) throw Error(ErrorKind::Catalog, where + ": malformed table");
      auto t = std::make_shared<TruthTable>();
      t->name = words[1];
      t->arity = std::stoi(words[2]);
      std::vector<Value> vals;
      for (std::size_t i = 3; i < words.size(); ++i) {
        std::string w = words[i];
        std::erase(w, '/');
        if (w.empty()) continue;
        auto v = value_from_name(w);
        if (!v) throw Error(ErrorKind::Catalog, where + ": bad value '" + words[i] + "'");
        vals.push_back(*v);
      }
      if (t->arity == 1 && vals.size() == 3) {
        for (int a = 0; a < 3; ++a) t->cells[static_cast<int>(kTableOrder[a])] = vals[a];
      } else if (t->arity == 2 && vals.size() == 9) {
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            t->cells[3 * static_cast<int>(kTableOrder[a]) + static_cast<int>(kTableOrder[b])] =
                vals[3 * a + b];
      } else {
        throw Error(ErrorKind::Catalog, where + ": table " + t->name + " is not total");
      }
      tables_[t->name] = t;

    } else if (kind == "rule") {
      auto [head, body] = split_colon(line, where);
      auto hw = split_ws(head);
      if (hw.size() != 4) throw Error(ErrorKind::Catalog, where + ": malformed rule head");
      auto r = std::make_shared<RuleSchema>();
      r->name = hw[1];
      r->arity = std::stoi(hw[2]);
      auto ps = slot_from_name(hw[3]);
      if (!ps) throw Error(ErrorKind::Catalog, where + ": bad slot " + hw[3]);
      r->principal_slot = *ps;
      std::istringstream prem(body);
      for (std::string chunk; std::getline(prem, chunk, ';');) {
        PremissSchema p;
        for (const auto& pl : split_ws(chunk)) {
          auto c = pl.find(':');
          auto s = c == std::string::npos ? std::nullopt : slot_from_name(pl.substr(0, c));
          std::string arg = c == std::string::npos ? "" : pl.substr(c + 1);
          if (!s || (arg != "A" && arg != "B") || (arg == "B" && r->arity < 2))
            throw Error(ErrorKind::Catalog, where + ": bad placement '" + pl + "'");
          p.placements.push_back({*s, arg == "A" ? 0 : 1});
        }
        if (p.placements.empty()) throw Error(ErrorKind::Catalog, where + ": empty premiss");
        r->premisses.push_back(std::move(p));
      }
      rules_[r->name] = r;

    } else if (kind == "rules" || kind == "axiom") {
      std::string tname = words.size() > 1 ? words[1] : "";
      auto t = tables_.find(tname);
      if (t == tables_.end()) throw Error(ErrorKind::Catalog, where + ": unknown table " + tname);
      auto& op = ops_[tname];
      if (!op) {
        op = std::make_shared<Operation>();
        op->table = t->second;
      }
      if (kind == "axiom") {
        auto s = words.size() == 3 ? slot_from_name(words[2]) : std::nullopt;
        if (!s) throw Error(ErrorKind::Catalog, where + ": malformed axiom");
        op->axiom_slots.push_back(*s);
      } else {
        auto [head, body] = split_colon(line, where);
        op->rules.clear();
        for (const auto& rn : split_ws(body)) {
          auto r = rules_.find(rn);
          if (r == rules_.end()) throw Error(ErrorKind::Catalog, where + ": unknown rule " + rn);
          if (r->second->arity != t->second->arity)
            throw Error(ErrorKind::Catalog, where + ": arity mismatch for " + rn);
          op->rules.push_back(r->second);
        }
      }

    } else if (kind == "logic") {
      auto [head, body] = split_colon(line, where);
      auto hw = split_ws(head);
      if (hw.size() < 4 || hw[2] != "designated")
        throw Error(ErrorKind::Catalog, where + ": malformed logic head");
      auto l = std::make_shared<LogicDef>();
      l->name = hw[1];
      if (hw[3] == "1") {
        l->designated_mask = 1u << static_cast<int>(Value::One);
        l->goal = GoalSequent::First;
      } else if (hw[3] == "1,u" || hw[3] == "u,1") {
        l->designated_mask = (1u << static_cast<int>(Value::One)) |
                             (1u << static_cast<int>(Value::Undef));
        l->goal = GoalSequent::Second;
      } else {
        throw Error(ErrorKind::Catalog, where + ": designated set must be 1 or 1,u");
      }
      for (std::size_t i = 4; i < hw.size(); ++i) {
        if (hw[i] != "constants") throw Error(ErrorKind::Catalog, where + ": unknown flag " + hw[i]);
        l->constants_enabled = true;
      }
      for (const auto& b : split_ws(body)) {
        auto eq = b.find('=');
        auto role = eq == std::string::npos ? std::nullopt : connective_from_role(b.substr(0, eq));
        if (!role) throw Error(ErrorKind::Catalog, where + ": bad binding '" + b + "'");
        std::string tname = b.substr(eq + 1);
        auto t = tables_.find(tname);
        if (t == tables_.end()) throw Error(ErrorKind::Catalog, where + ": unknown table " + tname);
        if (t->second->arity != arity(*role))
          throw Error(ErrorKind::Catalog, where + ": arity mismatch binding " + b);
        auto op = ops_.find(tname);
        l->ops[static_cast<int>(*role)] =
            op != ops_.end() ? std::make_shared<const Operation>(*op->second)
                             : std::make_shared<const Operation>(Operation{t->second, {}, {}});
      }
      l->finalize();
      logics_[l->name] = l;

    } else {
      throw Error(ErrorKind::Catalog, where + ": unknown record '" + kind + "'");
    }
  }
}

std::shared_ptr<const LogicDef> Registry::logic(std::string_view name) const {
  auto it = logics_.find(name);
  if (it != logics_.end()) return it->second;
  std::string names;
  for (const auto& n : logic_names()) names += (names.empty() ? "" : ", ") + n;
  throw Error(ErrorKind::UnknownLogic,
              "unknown logic '" + std::string(name) + "'; available: " + names);
}

std::vector<std::string> Registry::logic_names() const {
  std::vector<std::string> out;
  for (const auto& [n, _] : logics_) out.push_back(n);
  return out;
}

std::vector<std::shared_ptr<const TruthTable>> Registry::tables() const {
  std::vector<std::shared_ptr<const TruthTable>> out;
  for (const auto& [_, t] : tables_) out.push_back(t);
  return out;
}

std::shared_ptr<const TruthTable> Registry::table(std::string_view name) const {
  auto it = tables_.find(name);
  return it == tables_.end() ? nullptr : it->second;
}

std::shared_ptr<const Operation> Registry::operation(std::string_view table_name) const {
  auto it = ops_.find(table_name);
  return it == ops_.end() ? nullptr : it->second;
}

std::shared_ptr<const RuleSchema> Registry::rule(std::string_view name) const {
  auto it = rules_.find(name);
  return it == rules_.end() ? nullptr : it->second;
}

const LogicDef& lookup_logic(std::string_view name) { return *Registry::builtin().logic(name); }

Value eval(const LogicDef& logic, const Assignment& h, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = h.find(f.name());
      if (it == h.end()) throw Error(ErrorKind::MissingAtom, "no value for atom " + f.name());
      return it->second;
    }
    case Formula::Kind::Constant:
      if (!logic.constants_enabled)
        throw Error(ErrorKind::UnknownConnective, "constants are not enabled in " + logic.name);
      return f.constant_kind() == ConstantKind::Top      ? Value::One
             : f.constant_kind() == ConstantKind::Bottom ? Value::Zero
                                                         : Value::Undef;
    case Formula::Kind::Compound:
      break;
  }
  const TruthTable& t = logic.table(f.connective());
  if (t.arity == 1) return t(eval(logic, h, f.arg(0)));
  return t(eval(logic, h, f.arg(0)), eval(logic, h, f.arg(1)));
}

}  // namespace bsc
