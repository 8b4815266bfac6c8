#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsc/calculus.hpp"
#include "bsc/cli.hpp"
#include "bsc/error.hpp"
#include "bsc/interpolation.hpp"
#include "bsc/prover.hpp"
#include "bsc/semantics.hpp"

namespace py = pybind11;
using namespace bsc;

namespace {

GoalMode mode_arg(const LogicDef& l, const std::string& m) {
  if (m == "designated") return designated_mode(l);
  if (m == "no-counterexample" || m == "no_counterexample") return GoalMode::NoCounterexample;
  if (m == "liberal") return GoalMode::Liberal;
  throw Error(ErrorKind::Precondition, "unknown mode '" + m + "'");
}

std::map<std::string, std::string> assignment_dict(const Assignment& h) {
  std::map<std::string, std::string> out;
  for (const auto& [a, v] : h) out[a] = std::string(value_name(v));
  return out;
}

py::dict prove_py(const std::string& logic, const std::string& premisses, const std::string& conclusion,
                  const std::string& mode) {
  const LogicDef& l = lookup_logic(logic);
  auto r = prove(l, mode_arg(l, mode), parse_formula_list(premisses, l.signature()),
                 parse_formula(conclusion, l.signature()));
  py::dict d;
  d["proved"] = r.proved;
  d["root"] = render(r.root);
  d["tree"] = render_tree(r.tree);
  d["size"] = tree_size(r.tree);
  if (r.countermodel) d["countermodel"] = assignment_dict(*r.countermodel);
  else d["countermodel"] = py::none();
  return d;
}

bool check_py(const std::string& logic, const std::string& premisses, const std::string& conclusion) {
  const LogicDef& l = lookup_logic(logic);
  return matrix_consequence(l, parse_formula_list(premisses, l.signature()),
                            parse_formula(conclusion, l.signature()));
}

std::optional<std::map<std::string, std::string>> countermodel_py(const std::string& logic,
                                                                 const std::string& bisequent) {
  const LogicDef& l = lookup_logic(logic);
  auto d = decide(l, parse_bisequent(bisequent, l.signature()));
  if (d.proved) return std::nullopt;
  return assignment_dict(*d.countermodel);
}

std::string value_py(const std::string& logic, const std::string& formula,
                     const std::map<std::string, std::string>& h) {
  const LogicDef& l = lookup_logic(logic);
  Assignment a;
  for (const auto& [k, v] : h) {
    auto x = value_from_name(v);
    if (!x) throw Error(ErrorKind::Precondition, "value must be 0, u or 1");
    a[k] = *x;
  }
  return std::string(value_name(eval(l, a, parse_formula(formula, l.signature()))));
}

std::string interpolate_py(const std::string& logic, const std::string& phi, const std::string& psi) {
  const LogicDef& l = lookup_logic(logic);
  return render(interpolate(l, parse_formula(phi, l.signature()), parse_formula(psi, l.signature())));
}

bool verify_interpolant_py(const std::string& logic, const std::string& phi, const std::string& psi,
                           const std::string& candidate) {
  const LogicDef& l = lookup_logic(logic);
  auto s = l.signature();
  return verify_interpolant(l, parse_formula(phi, s), parse_formula(psi, s), parse_formula(candidate, s));
}

std::vector<std::pair<std::string, bool>> verify_rules_py(const std::string& logic) {
  const LogicDef& l = lookup_logic(logic);
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& r : catalog(l).rules) out.emplace_back(r.name, verify_rule_schema(l, r).sound_and_invertible);
  return out;
}

py::dict synthesize_py(const std::string& table, const std::string& slot) {
  auto t = Registry::builtin().table(table);
  if (!t) throw Error(ErrorKind::UnknownConnective, "unknown table '" + table + "'");
  auto s = slot_from_name(slot);
  if (!s) throw Error(ErrorKind::Precondition, "slot must be one of ant1 suc1 ant2 suc2");
  auto res = synthesize_rules(*t, *s);
  py::dict d;
  if (std::holds_alternative<AxiomSchema>(res)) {
    d["axiom"] = true;
    d["premisses"] = py::list();
    return d;
  }
  const auto& r = std::get<RuleSchema>(res);
  py::list prem;
  for (const auto& p : r.premisses) {
    py::list pl;
    for (const auto& x : p.placements) pl.append(py::make_tuple(std::string(slot_name(x.slot)), x.arg_index));
    prem.append(pl);
  }
  d["axiom"] = false;
  d["premisses"] = prem;
  d["verified"] = verify_rule_schema(*t, r).sound_and_invertible;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bisequent calculus prover for three-valued logics";
  py::register_exception<Error>(m, "BscError", PyExc_ValueError);

  m.def("list_logics", [] { return Registry::builtin().logic_names(); });
  m.def("prove", &prove_py, py::arg("logic"), py::arg("premisses"), py::arg("conclusion"),
        py::arg("mode") = "designated");
  m.def("check", &check_py, py::arg("logic"), py::arg("premisses"), py::arg("conclusion"));
  m.def("countermodel", &countermodel_py, py::arg("logic"), py::arg("bisequent"));
  m.def("value", &value_py, py::arg("logic"), py::arg("formula"), py::arg("assignment"));
  m.def("interpolate", &interpolate_py, py::arg("logic"), py::arg("phi"), py::arg("psi"));
  m.def("verify_interpolant", &verify_interpolant_py, py::arg("logic"), py::arg("phi"), py::arg("psi"),
        py::arg("candidate"));
  m.def("verify_rules", &verify_rules_py, py::arg("logic"));
  m.def("synthesize", &synthesize_py, py::arg("table"), py::arg("slot"));
  m.def("run_cli", [](const std::vector<std::string>& args) {
    auto o = cli::run(args);
    return py::make_tuple(o.status, o.out, o.err);
  }, py::arg("args"));
}
