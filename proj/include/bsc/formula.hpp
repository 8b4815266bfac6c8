#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bsc {

// Connective roles. A logic binds each role it uses to a truth table.
enum class Connective : std::uint8_t {
  Neg, NegH, NegB, NegP, NegDP, Box, Dia,  // unary
  And, AndL, Or, OrL, Impl, Circ1, Circ2,  // binary
};
inline constexpr int kConnectiveCount = 14;

int arity(Connective c);
// Surface token, e.g. "~", "neg_h", "->".
std::string_view token(Connective c);
// Role name used in catalog files, e.g. "neg", "and_l", "o1".
std::string_view role_name(Connective c);
std::optional<Connective> connective_from_role(std::string_view role);

enum class ConstantKind : std::uint8_t { Top, Bottom, Undef };

class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<Connective> cs, bool constants = false);
  static Signature all();

  bool has(Connective c) const { return (mask_ >> static_cast<int>(c)) & 1u; }
  void add(Connective c) { mask_ |= 1u << static_cast<int>(c); }
  bool constants() const { return constants_; }
  void set_constants(bool on) { constants_ = on; }
  std::vector<Connective> connectives() const;

 private:
  std::uint32_t mask_ = 0;
  bool constants_ = false;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Constant, Compound };

  static Formula atom(std::string name);
  static Formula constant(ConstantKind k);
  static Formula compound(Connective c, std::vector<Formula> args);
  static Formula unary(Connective c, Formula a) { return compound(c, {std::move(a)}); }
  static Formula binary(Connective c, Formula a, Formula b) {
    return compound(c, {std::move(a), std::move(b)});
  }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Kind::Atom; }
  bool is_constant() const { return node_->kind == Kind::Constant; }
  bool is_compound() const { return node_->kind == Kind::Compound; }
  bool is_atomic() const { return node_->kind != Kind::Compound; }

  const std::string& name() const { return node_->name; }
  ConstantKind constant_kind() const { return node_->constant; }
  Connective connective() const { return node_->connective; }
  const std::vector<Formula>& args() const { return node_->args; }
  const Formula& arg(std::size_t i) const { return node_->args[i]; }

  int complexity() const { return node_->complexity; }
  std::size_t hash() const { return node_->hash; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  // Structural total order: by complexity, then kind, then contents.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    ConstantKind constant = ConstantKind::Top;
    Connective connective = Connective::Neg;
    std::string name;
    std::vector<Formula> args;
    int complexity = 0;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

Formula parse_formula(std::string_view text, const Signature& sig);
// Comma-separated list; empty or blank text gives an empty list.
std::vector<Formula> parse_formula_list(std::string_view text, const Signature& sig);

// Minimal parentheses; parse_formula(render(f)) == f.
std::string render(const Formula& f);

std::set<std::string> atoms(const Formula& f);
void collect_atoms(const Formula& f, std::set<std::string>& out);
int complexity(const Formula& f);

bool is_identifier(std::string_view s);
// Constant names and word connectives ("T", "box", "and_l", ...) cannot be atoms.
bool is_reserved(std::string_view s);

}  // namespace bsc

template <>
struct std::hash<bsc::Formula> {
  std::size_t operator()(const bsc::Formula& f) const noexcept { return f.hash(); }
};
