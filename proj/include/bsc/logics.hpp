#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsc/formula.hpp"
#include "bsc/schema.hpp"

namespace bsc {

// Numeric order 0 < u < 1; used for indexing and display only.
enum class Value : std::uint8_t { Zero = 0, Undef = 1, One = 2 };
inline constexpr std::array<Value, 3> kValues{Value::Zero, Value::Undef, Value::One};
// Order in which tables are written in the catalog and tuples are swept.
inline constexpr std::array<Value, 3> kTableOrder{Value::One, Value::Undef, Value::Zero};

std::string_view value_name(Value v);  // "0", "u", "1"
std::optional<Value> value_from_name(std::string_view s);

using Assignment = std::map<std::string, Value>;

struct TruthTable {
  std::string name;
  int arity = 1;
  std::array<Value, 9> cells{};  // cells[3*a + b], indexed by numeric value

  Value operator()(Value a) const { return cells[static_cast<int>(a)]; }
  Value operator()(Value a, Value b) const {
    return cells[3 * static_cast<int>(a) + static_cast<int>(b)];
  }
  bool operator==(const TruthTable& o) const { return arity == o.arity && cells == o.cells; }
};

// A truth table together with the bisequent rules characterising it.
struct Operation {
  std::shared_ptr<const TruthTable> table;
  std::vector<std::shared_ptr<const RuleSchema>> rules;  // connective not yet bound
  std::vector<Slot> axiom_slots;
};

enum class GoalSequent : std::uint8_t { First, Second };

class LogicDef {
 public:
  std::string name;
  std::uint8_t designated_mask = 0;  // bit i set iff Value(i) designated
  GoalSequent goal = GoalSequent::First;
  bool constants_enabled = false;
  std::array<std::shared_ptr<const Operation>, kConnectiveCount> ops{};

  bool is_designated(Value v) const { return (designated_mask >> static_cast<int>(v)) & 1u; }
  std::vector<Value> designated() const;
  bool has(Connective c) const { return ops[static_cast<int>(c)] != nullptr; }
  const TruthTable& table(Connective c) const;  // throws UnknownConnective
  Signature signature() const;

  // Rules with their connective bound to the role, in role then slot order.
  const std::vector<RuleSchema>& rules() const { return rules_; }
  const std::vector<AxiomSchema>& extra_axioms() const { return axioms_; }
  const RuleSchema* rule_for(Connective c, Slot s) const {
    int i = rule_index_[static_cast<int>(c)][static_cast<int>(s)];
    return i < 0 ? nullptr : &rules_[i];
  }
  bool axiom_covers(Connective c, Slot s) const {
    return (axiom_mask_[static_cast<int>(c)] >> static_cast<int>(s)) & 1u;
  }
  // Connective/slot pairs with neither a rule nor an axiom schema.
  std::vector<std::pair<Connective, Slot>> uncovered() const;

  // Instantiates rules and axioms from ops; call after ops are set.
  void finalize();

 private:
  std::vector<RuleSchema> rules_;
  std::vector<AxiomSchema> axioms_;
  std::array<std::array<int, 4>, kConnectiveCount> rule_index_{};
  std::array<std::uint8_t, kConnectiveCount> axiom_mask_{};
};

// Catalog of tables, rules, operations and logics.
//
// Records, one per line, '#' starts a comment:
//   table <name> <arity> <cells>        cells in order 1 u 0, binary rows split by '/'
//   rule <name> <arity> <slot> : <slot>:<A|B> ... ; ...
//   rules <table> : <rule-name> ...
//   axiom <table> <slot>
//   logic <name> designated <1|1,u> [constants] : <role>=<table> ...
class Registry {
 public:
  static const Registry& builtin();
  // Builtin records plus the records of extra catalog files.
  static Registry with_files(const std::vector<std::string>& paths);

  void load_text(std::string_view text, std::string_view origin = "<catalog>");
  void load_file(const std::string& path);

  std::shared_ptr<const LogicDef> logic(std::string_view name) const;
  std::vector<std::string> logic_names() const;  // sorted
  std::vector<std::shared_ptr<const TruthTable>> tables() const;
  std::shared_ptr<const TruthTable> table(std::string_view name) const;
  std::shared_ptr<const Operation> operation(std::string_view table_name) const;
  std::shared_ptr<const RuleSchema> rule(std::string_view name) const;

 private:
  std::map<std::string, std::shared_ptr<const TruthTable>, std::less<>> tables_;
  std::map<std::string, std::shared_ptr<const RuleSchema>, std::less<>> rules_;
  std::map<std::string, std::shared_ptr<Operation>, std::less<>> ops_;
  std::map<std::string, std::shared_ptr<const LogicDef>, std::less<>> logics_;
};

const LogicDef& lookup_logic(std::string_view name);

Value eval(const LogicDef& logic, const Assignment& h, const Formula& f);

// Embedded catalog text.
std::string_view builtin_tables_text();
std::string_view builtin_rules_text();
std::string_view builtin_logics_text();

}  // namespace bsc
