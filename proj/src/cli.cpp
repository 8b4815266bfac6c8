#include "bsc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "bsc/calculus.hpp"
#include "bsc/error.hpp"
#include "bsc/interpolation.hpp"
#include "bsc/prover.hpp"
#include "bsc/semantics.hpp"

namespace bsc::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string logic = "K3";
  std::string mode = "designated";
  bool json = false;
  int max_atoms = kDefaultMaxAtoms;
  std::vector<std::string> catalogs;
  std::vector<std::string> positional;
};

GoalMode parse_mode(const std::string& m, const LogicDef& logic) {
  if (m == "designated") return designated_mode(logic);
  if (m == "no-counterexample") return GoalMode::NoCounterexample;
  if (m == "liberal") return GoalMode::Liberal;
  throw Error(ErrorKind::Precondition, "unknown mode '" + m + "'");
}

std::string render_assignment(const Assignment& h) {
  std::string out;
  for (const auto& [a, v] : h) {
    if (!out.empty()) out += ' ';
    out += a + "=" + std::string(value_name(v));
  }
  return out;
}

json assignment_json(const Assignment& h) {
  json j = json::object();
  for (const auto& [a, v] : h) j[a] = std::string(value_name(v));
  return j;
}

json tree_json(const ProofTree& t) {
  json j;
  j["node"] = render(t->node);
  if (t->rule) {
    j["rule"] = t->rule->name;
    j["principal"] = {{"slot", slot_name(t->rule->occurrence.slot)},
                      {"index", t->rule->occurrence.index}};
    j["children"] = json::array();
    for (const auto& c : t->children) j["children"].push_back(tree_json(c));
  } else {
    j["leaf"] = t->status == LeafStatus::Axiomatic ? "axiomatic" : "open";
  }
  return j;
}

json formulas_json(const std::vector<Formula>& fs) {
  json j = json::array();
  for (const auto& f : fs) j.push_back(render(f));
  return j;
}

std::optional<Connective> parse_connective(const std::string& s) {
  if (auto c = connective_from_role(s)) return c;
  for (int i = 0; i < kConnectiveCount; ++i)
    if (token(static_cast<Connective>(i)) == s) return static_cast<Connective>(i);
  return std::nullopt;
}

std::string format_rule(const RuleSchema& r) {
  std::string out = r.name + "  [" + std::string(slot_name(r.principal_slot)) + "]";
  for (std::size_t i = 0; i < r.premisses.size(); ++i) {
    out += i ? " ;" : " :";
    for (const auto& p : r.premisses[i].placements)
      out += " " + std::string(slot_name(p.slot)) + (p.arg_index ? ":B" : ":A");
  }
  return out;
}

json rule_json(const RuleSchema& r) {
  json prem = json::array();
  for (const auto& p : r.premisses) {
    json pl = json::array();
    for (const auto& x : p.placements)
      pl.push_back({{"slot", slot_name(x.slot)}, {"arg", x.arg_index}});
    prem.push_back(pl);
  }
  return {{"name", r.name},
          {"connective", role_name(r.connective)},
          {"principal_slot", slot_name(r.principal_slot)},
          {"premisses", prem}};
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out)
      : opt_(o), out_(out), reg_(Registry::with_files(o.catalogs)) {}

  const LogicDef& logic() {
    if (!logic_) logic_ = reg_.logic(opt_.logic);
    return *logic_;
  }

  void need(std::size_t n, const char* usage) {
    if (opt_.positional.size() != n)
      throw Error(ErrorKind::Precondition, std::string("usage: ") + usage);
  }

  std::vector<Formula> premisses(const std::string& s) {
    return parse_formula_list(s, logic().signature());
  }
  Formula formula(const std::string& s) { return parse_formula(s, logic().signature()); }

  int prove_cmd() {
    need(2, "prove --logic L PREMISSES CONCLUSION");
    auto gamma = premisses(opt_.positional[0]);
    auto phi = formula(opt_.positional[1]);
    GoalMode mode = parse_mode(opt_.mode, logic());
    auto r = prove(logic(), mode, gamma, phi);
    if (opt_.json) {
      json j{{"command", "prove"},
             {"logic", logic().name},
             {"mode", mode_name(mode)},
             {"premisses", formulas_json(gamma)},
             {"conclusion", render(phi)},
             {"root", render(r.root)},
             {"verdict", r.proved ? "proved" : "refuted"},
             {"tree", tree_json(r.tree)}};
      if (r.countermodel) j["countermodel"] = assignment_json(*r.countermodel);
      out_ << j.dump(2) << '\n';
    } else {
      out_ << (r.proved ? "PROVED " : "REFUTED ") << render(r.root) << '\n';
      out_ << render_tree(r.tree);
      if (r.countermodel) out_ << "countermodel: " << render_assignment(*r.countermodel) << '\n';
    }
    return r.proved ? 0 : 1;
  }

  int check_cmd() {
    need(2, "check-semantic --logic L PREMISSES CONCLUSION");
    auto gamma = premisses(opt_.positional[0]);
    auto phi = formula(opt_.positional[1]);
    GoalMode mode = parse_mode(opt_.mode, logic());
    Bisequent root = goal_bisequent(mode, gamma, phi);
    auto fals = falsifying_assignments(logic(), root, opt_.max_atoms);
    bool valid = fals.empty();
    if (opt_.json) {
      json j{{"command", "check-semantic"}, {"logic", logic().name}, {"mode", mode_name(mode)},
             {"premisses", formulas_json(gamma)}, {"conclusion", render(phi)},
             {"verdict", valid ? "valid" : "invalid"}};
      if (!valid) j["counterexample"] = assignment_json(fals.front());
      out_ << j.dump(2) << '\n';
    } else {
      out_ << (valid ? "VALID" : "INVALID") << '\n';
      if (!valid) out_ << "counterexample: " << render_assignment(fals.front()) << '\n';
    }
    return valid ? 0 : 1;
  }

  int countermodel_cmd() {
    Bisequent root;
    if (opt_.positional.size() == 1) {
      root = parse_bisequent(opt_.positional[0], logic().signature());
    } else {
      need(2, "countermodel --logic L (BISEQUENT | PREMISSES CONCLUSION)");
      root = goal_bisequent(parse_mode(opt_.mode, logic()), premisses(opt_.positional[0]),
                            formula(opt_.positional[1]));
    }
    auto d = decide(logic(), root);
    if (opt_.json) {
      json j{{"command", "countermodel"}, {"logic", logic().name}, {"root", render(root)},
             {"verdict", d.proved ? "proved" : "refuted"}};
      if (d.countermodel) {
        j["countermodel"] = assignment_json(*d.countermodel);
        j["open_leaf"] = render(*d.open_leaf);
      }
      out_ << j.dump(2) << '\n';
    } else if (d.proved) {
      out_ << "no countermodel: " << render(root) << " is provable\n";
    } else {
      out_ << render_assignment(*d.countermodel) << '\n';
      out_ << "open leaf: " << render(*d.open_leaf) << '\n';
    }
    return d.proved ? 0 : 1;
  }

  int interpolate_cmd() {
    need(2, "interpolate --logic L PHI PSI");
    auto phi = formula(opt_.positional[0]);
    auto psi = formula(opt_.positional[1]);
    try {
      auto r = interpolate_detailed(logic(), phi, psi);
      bool ok = verify_interpolant(logic(), phi, psi, r.interpolant);
      if (opt_.json) {
        out_ << json{{"command", "interpolate"}, {"logic", logic().name}, {"phi", render(phi)},
                     {"psi", render(psi)}, {"interpolant", render(r.interpolant)},
                     {"verified", ok}}
                    .dump(2)
             << '\n';
      } else {
        out_ << render(r.interpolant) << '\n';
        out_ << (ok ? "verified" : "VERIFICATION FAILED") << '\n';
      }
      return ok ? 0 : 1;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotEntailed && e.kind() != ErrorKind::NotContingent &&
          e.kind() != ErrorKind::NoSharedAtom)
        throw;
      if (opt_.json)
        out_ << json{{"command", "interpolate"}, {"logic", logic().name}, {"error", e.what()}}.dump(2)
             << '\n';
      else
        out_ << "no interpolant: " << e.what() << '\n';
      return 1;
    }
  }

  int verify_rules_cmd() {
    need(0, "verify-rules --logic L");
    Catalog cat = catalog(logic());
    bool all = true;
    json rows = json::array();
    for (const auto& r : cat.rules) {
      auto v = verify_rule_schema(logic(), r);
      all = all && v.sound_and_invertible;
      std::string verdict = "sound_and_invertible";
      if (!v.sound_and_invertible) {
        verdict = "counterexample (";
        for (std::size_t i = 0; i < v.counterexample.size(); ++i)
          verdict += (i ? "," : "") + std::string(value_name(v.counterexample[i]));
        verdict += ")";
      }
      rows.push_back({{"rule", r.name}, {"verdict", verdict}});
      if (!opt_.json) out_ << r.name << " " << verdict << '\n';
    }
    for (const auto& a : cat.axioms) {
      bool ok = verify_axiom_schema(logic().table(a.connective), a.slot);
      all = all && ok;
      std::string name = "axiom(" + std::string(token(a.connective)) + "@" + std::string(slot_name(a.slot)) + ")";
      rows.push_back({{"rule", name}, {"verdict", ok ? "sound" : "unsound"}});
      if (!opt_.json) out_ << name << " " << (ok ? "sound" : "unsound") << '\n';
    }
    if (opt_.json) out_ << json{{"command", "verify-rules"}, {"logic", logic().name}, {"rules", rows}}.dump(2) << '\n';
    return all ? 0 : 1;
  }

  Connective connective_arg(const std::string& s) {
    auto c = parse_connective(s);
    if (!c || !logic().has(*c))
      throw Error(ErrorKind::UnknownConnective, "connective '" + s + "' is not part of " + logic().name);
    return *c;
  }

  int synthesize_cmd() {
    need(2, "synthesize --logic L CONNECTIVE SLOT");
    Connective c = connective_arg(opt_.positional[0]);
    auto slot = slot_from_name(opt_.positional[1]);
    if (!slot) throw Error(ErrorKind::Precondition, "slot must be one of ant1 suc1 ant2 suc2");
    auto r = synthesize_rules(logic().table(c), *slot, c);
    if (auto* ax = std::get_if<AxiomSchema>(&r)) {
      if (opt_.json)
        out_ << json{{"axiom", {{"connective", role_name(ax->connective)}, {"slot", slot_name(ax->slot)}}}}.dump(2) << '\n';
      else
        out_ << "axiom schema: any '" << token(c) << "' formula in " << slot_name(*slot) << '\n';
      return 0;
    }
    const auto& rule = std::get<RuleSchema>(r);
    bool ok = verify_rule_schema(logic(), rule).sound_and_invertible;
    if (opt_.json)
      out_ << json{{"rule", rule_json(rule)}, {"verified", ok}}.dump(2) << '\n';
    else
      out_ << format_rule(rule) << '\n';
    return ok ? 0 : 1;
  }

  int table_cmd() {
    need(1, "table --logic L CONNECTIVE");
    Connective c = connective_arg(opt_.positional[0]);
    const TruthTable& t = logic().table(c);
    if (opt_.json) {
      json cells = json::object();
      for (Value a : kTableOrder) {
        if (t.arity == 1) {
          cells[std::string(value_name(a))] = std::string(value_name(t(a)));
          continue;
        }
        for (Value b : kTableOrder)
          cells[std::string(value_name(a)) + "," + std::string(value_name(b))] =
              std::string(value_name(t(a, b)));
      }
      out_ << json{{"table", t.name}, {"arity", t.arity}, {"cells", cells}}.dump(2) << '\n';
      return 0;
    }
    out_ << t.name << '\n';
    if (t.arity == 1) {
      for (Value a : kTableOrder) out_ << "  " << value_name(a) << " | " << value_name(t(a)) << '\n';
      return 0;
    }
    out_ << "  " << token(c) << " | 1 u 0\n  --+------\n";
    for (Value a : kTableOrder) {
      out_ << "  " << value_name(a) << " |";
      for (Value b : kTableOrder) out_ << ' ' << value_name(t(a, b));
      out_ << '\n';
    }
    return 0;
  }

  int list_cmd() {
    json rows = json::array();
    for (const auto& n : reg_.logic_names()) {
      auto l = reg_.logic(n);
      std::string d = l->goal == GoalSequent::First ? "{1}" : "{1,u}";
      std::string conns;
      for (Connective c : l->signature().connectives()) conns += (conns.empty() ? "" : " ") + std::string(token(c));
      rows.push_back({{"name", n}, {"designated", d}, {"connectives", conns}});
      if (!opt_.json) out_ << n << "  D=" << d << "  " << conns << '\n';
    }
    if (opt_.json) out_ << rows.dump(2) << '\n';
    return 0;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  Registry reg_;
  std::shared_ptr<const LogicDef> logic_;
};

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"Bisequent calculus prover for three-valued logics", "bsc"};
  app.require_subcommand(1);
  app.add_option("--catalog", opt.catalogs, "Extra catalog file with tables, rules or logics");

  auto add = [&](const std::string& name, const std::string& help, bool goal_flags) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--logic", opt.logic, "Logic name")->capture_default_str();
    sub->add_flag("--json", opt.json, "Machine-readable output");
    sub->add_option("--max-atoms", opt.max_atoms, "Atom cap for the matrix oracle")->capture_default_str();
    if (goal_flags)
      sub->add_option("--mode", opt.mode, "designated | no-counterexample | liberal")->capture_default_str();
    sub->add_option("args", opt.positional, "Positional arguments");
    sub->allow_extras(false);
    return sub;
  };
  auto* s_prove = add("prove", "Build a proof-search tree for a consequence", true);
  auto* s_check = add("check-semantic", "Decide a consequence with the matrix oracle", true);
  auto* s_cm = add("countermodel", "Countermodel for a bisequent or a goal", true);
  auto* s_int = add("interpolate", "Interpolant for an entailment (I1, I2, P1, P2)", false);
  auto* s_ver = add("verify-rules", "Check every catalogued rule against the tables", false);
  auto* s_syn = add("synthesize", "Synthesize a rule for a connective and slot", false);
  auto* s_tab = add("table", "Print a connective's truth table", false);
  auto* s_list = add("list-logics", "List registered logics", false);

  std::ostringstream out, err;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  try {
    Runner r(opt, out);
    int status = 0;
    if (s_prove->parsed()) status = r.prove_cmd();
    else if (s_check->parsed()) status = r.check_cmd();
    else if (s_cm->parsed()) status = r.countermodel_cmd();
    else if (s_int->parsed()) status = r.interpolate_cmd();
    else if (s_ver->parsed()) status = r.verify_rules_cmd();
    else if (s_syn->parsed()) status = r.synthesize_cmd();
    else if (s_tab->parsed()) status = r.table_cmd();
    else if (s_list->parsed()) status = r.list_cmd();
    return {status, out.str(), err.str()};
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return {2, out.str(), err.str()};
  }
}

}  // namespace bsc::cli
