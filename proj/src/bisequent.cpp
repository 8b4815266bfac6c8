#include "bsc/bisequent.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "bsc/error.hpp"
#include "bsc/logics.hpp"

namespace bsc {

namespace {

bool intersects(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.empty() || b.empty()) return false;
  if (a.size() * b.size() <= 64) {
    for (const auto& x : a)
      if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    return false;
  }
  std::unordered_set<Formula> seen(a.begin(), a.end());
  for (const auto& y : b)
    if (seen.count(y)) return true;
  return false;
}

bool contains_constant(const std::vector<Formula>& v, ConstantKind k) {
  return std::any_of(v.begin(), v.end(),
                     [k](const Formula& f) { return f.is_constant() && f.constant_kind() == k; });
}

// Positions of top-level occurrences of needle (outside parentheses).
std::vector<std::size_t> top_level(std::string_view text, std::string_view needle) {
  std::vector<std::size_t> out;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (depth == 0 && text.substr(i, needle.size()) == needle) out.push_back(i);
  }
  return out;
}

std::string normalize_arrows(std::string_view text) {
  std::string s(text);
  const std::string uarrow = "\xE2\x87\x92";  // rightwards double arrow
  for (auto k = s.find(uarrow); k != std::string::npos; k = s.find(uarrow, k)) s.replace(k, 3, "=>");
  return s;
}

std::vector<Formula> parse_side(std::string_view text, std::size_t base, const Signature& sig) {
  try {
    return parse_formula_list(text, sig);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" at offset "));
    throw ParseError(e.kind(), base + e.offset(), msg);
  }
}

std::pair<std::vector<Formula>, std::vector<Formula>> parse_sequent(std::string_view text,
                                                                    std::size_t base,
                                                                    const Signature& sig) {
  auto arrows = top_level(text, "=>");
  if (arrows.size() != 1)
    throw ParseError(ErrorKind::Syntax, base, "a sequent needs exactly one '=>'");
  std::size_t k = arrows[0];
  auto lhs = parse_side(text.substr(0, k), base, sig);
  return {std::move(lhs), parse_side(text.substr(k + 2), base + k + 2, sig)};
}

void render_list(const std::vector<Formula>& fs, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    bool paren = fs[i].is_compound() && fs[i].connective() == Connective::Or;
    if (paren) out += '(';
    out += render(fs[i]);
    if (paren) out += ')';
  }
}

}  // namespace

std::size_t Bisequent::size() const {
  std::size_t n = 0;
  for (const auto& s : slots) n += s.size();
  return n;
}

bool operator==(const Bisequent& a, const Bisequent& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.slots[i].size() != b.slots[i].size()) return false;
    auto x = a.slots[i], y = b.slots[i];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

Bisequent parse_bisequent(std::string_view text_in, const Signature& sig) {
  std::string text = normalize_arrows(text_in);
  std::optional<Bisequent> found;
  std::optional<ParseError> first_error;
  int successes = 0;
  for (std::size_t bar : top_level(text, "|")) {
    try {
      auto [g, d] = parse_sequent(std::string_view(text).substr(0, bar), 0, sig);
      auto [p, s] = parse_sequent(std::string_view(text).substr(bar + 1), bar + 1, sig);
      if (successes++ == 0) found = Bisequent(std::move(g), std::move(d), std::move(p), std::move(s));
    } catch (const ParseError& e) {
      if (!first_error) first_error = e;
    }
  }
  if (successes == 1) return *found;
  if (successes > 1)
    throw ParseError(ErrorKind::Syntax, 0,
                     "ambiguous bisequent separator; parenthesize disjunctions");
  if (first_error) throw *first_error;
  throw ParseError(ErrorKind::Syntax, text.size(), "expected 'G => D | P => S'");
}

std::string render(const Bisequent& b) {
  std::string out;
  auto side = [&](Slot a, Slot s) {
    render_list(b[a], out);
    out += b[a].empty() ? "=>" : " =>";
    if (!b[s].empty()) out += ' ';
    render_list(b[s], out);
  };
  side(Slot::Ant1, Slot::Suc1);
  out += " | ";
  side(Slot::Ant2, Slot::Suc2);
  return out;
}

Bisequent canonical(Bisequent b) {
  for (auto& s : b.slots) std::sort(s.begin(), s.end());
  return b;
}

Bisequent join(const Bisequent& a, const Bisequent& b) {
  Bisequent out = a;
  for (int i = 0; i < 4; ++i) out.slots[i].insert(out.slots[i].end(), b.slots[i].begin(), b.slots[i].end());
  return out;
}

std::set<std::string> atoms(const Bisequent& b) {
  std::set<std::string> out;
  for (const auto& s : b.slots)
    for (const auto& f : s) collect_atoms(f, out);
  return out;
}

bool is_atomic(const Bisequent& b) {
  for (const auto& s : b.slots)
    for (const auto& f : s)
      if (f.is_compound()) return false;
  return true;
}

bool has_identity_clash(const Bisequent& b) {
  return intersects(b[Slot::Ant1], b[Slot::Suc1]) || intersects(b[Slot::Ant1], b[Slot::Suc2]) ||
         intersects(b[Slot::Ant2], b[Slot::Suc2]);
}

bool is_axiomatic(const LogicDef& logic, const Bisequent& b) {
  if (has_identity_clash(b)) return true;
  if (logic.constants_enabled) {
    if (contains_constant(b[Slot::Suc1], ConstantKind::Top) ||
        contains_constant(b[Slot::Suc2], ConstantKind::Top) ||
        contains_constant(b[Slot::Ant1], ConstantKind::Bottom) ||
        contains_constant(b[Slot::Ant2], ConstantKind::Bottom) ||
        contains_constant(b[Slot::Ant1], ConstantKind::Undef) ||
        contains_constant(b[Slot::Suc2], ConstantKind::Undef))
      return true;
  }
  for (Slot s : kSlots)
    for (const auto& f : b[s])
      if (f.is_compound() && logic.axiom_covers(f.connective(), s)) return true;
  return false;
}

}  // namespace bsc
