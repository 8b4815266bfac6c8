#include "bsc/formula.hpp"

#include <array>
#include <cctype>
#include <functional>

#include "bsc/error.hpp"

namespace bsc {

namespace {

struct ConnInfo {
  Connective c;
  int arity;
  std::string_view token;
  std::string_view role;
};

constexpr std::array<ConnInfo, kConnectiveCount> kConn{{
    {Connective::Neg, 1, "~", "neg"},
    {Connective::NegH, 1, "neg_h", "neg_h"},
    {Connective::NegB, 1, "neg_b", "neg_b"},
    {Connective::NegP, 1, "neg_p", "neg_p"},
    {Connective::NegDP, 1, "neg_dp", "neg_dp"},
    {Connective::Box, 1, "box", "box"},
    {Connective::Dia, 1, "dia", "dia"},
    {Connective::And, 2, "&", "and"},
    {Connective::AndL, 2, "and_l", "and_l"},
    {Connective::Or, 2, "|", "or"},
    {Connective::OrL, 2, "or_l", "or_l"},
    {Connective::Impl, 2, "->", "impl"},
    {Connective::Circ1, 2, "o1", "o1"},
    {Connective::Circ2, 2, "o2", "o2"},
}};

// Binding strength; higher binds tighter.
enum Level { kImpl = 1, kOr = 2, kAnd = 3, kUnary = 4, kAtomic = 5 };

int level_of(Connective c) {
  switch (c) {
    case Connective::And:
    case Connective::AndL:
      return kAnd;
    case Connective::Or:
    case Connective::OrL:
      return kOr;
    case Connective::Impl:
    case Connective::Circ1:
    case Connective::Circ2:
      return kImpl;
    default:
      return kUnary;
  }
}

int level_of(const Formula& f) { return f.is_compound() ? level_of(f.connective()) : kAtomic; }

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

enum class Tok { End, Ident, Conn, Const, LParen, RParen, Comma };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  Connective conn = Connective::Neg;
  ConstantKind constant = ConstantKind::Top;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) return {Tok::End, start, ""};
    char ch = s_[i_];
    if (ch == '(') return ++i_, Token{Tok::LParen, start, "("};
    if (ch == ')') return ++i_, Token{Tok::RParen, start, ")"};
    if (ch == ',') return ++i_, Token{Tok::Comma, start, ","};
    if (ch == '~') return ++i_, conn(start, "~", Connective::Neg);
    if (ch == '&') return ++i_, conn(start, "&", Connective::And);
    if (ch == '|') return ++i_, conn(start, "|", Connective::Or);
    if (s_.substr(i_, 2) == "->") return i_ += 2, conn(start, "->", Connective::Impl);
    static const std::array<std::pair<std::string_view, int>, 8> kUnicode{{
        {"\xC2\xAC", 0},      // negation sign
        {"\xE2\x88\xA7", 1},  // logical and
        {"\xE2\x88\xA8", 2},  // logical or
        {"\xE2\x86\x92", 3},  // rightwards arrow
        {"\xE2\x8A\xA4", 4},  // down tack (top)
        {"\xE2\x8A\xA5", 5},  // up tack (bottom)
        {"\xE2\x97\x87", 6},  // white diamond
        {"\xE2\x96\xA1", 7},  // white square
    }};
    for (auto [u, k] : kUnicode) {
      if (s_.substr(i_, u.size()) != u) continue;
      i_ += u.size();
      std::string t(u);
      switch (k) {
        case 0: return conn(start, t, Connective::Neg);
        case 1: return conn(start, t, Connective::And);
        case 2: return conn(start, t, Connective::Or);
        case 3: return conn(start, t, Connective::Impl);
        case 4: return {Tok::Const, start, t, Connective::Neg, ConstantKind::Top};
        case 5: return {Tok::Const, start, t, Connective::Neg, ConstantKind::Bottom};
        case 6: return conn(start, t, Connective::Dia);
        default: return conn(start, t, Connective::Box);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string word(s_.substr(start, i_ - start));
      if (word == "T") return {Tok::Const, start, word, Connective::Neg, ConstantKind::Top};
      if (word == "F") return {Tok::Const, start, word, Connective::Neg, ConstantKind::Bottom};
      if (word == "U") return {Tok::Const, start, word, Connective::Neg, ConstantKind::Undef};
      for (const auto& ci : kConn)
        if (ci.token == word) return conn(start, word, ci.c);
      return {Tok::Ident, start, word};
    }
    throw ParseError(ErrorKind::Syntax, start,
                     std::string("unexpected character '") + ch + "'");
  }

 private:
  static Token conn(std::size_t pos, std::string t, Connective c) {
    return {Tok::Conn, pos, std::move(t), c};
  }
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : lex_(text), sig_(sig) { advance(); }

  Formula parse_all() {
    Formula f = parse_impl();
    expect_end();
    return f;
  }

  std::vector<Formula> parse_list() {
    std::vector<Formula> out;
    if (cur_.kind == Tok::End) return out;
    for (;;) {
      out.push_back(parse_impl());
      if (cur_.kind != Tok::Comma) break;
      advance();
    }
    expect_end();
    return out;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect_end() {
    if (cur_.kind != Tok::End)
      throw ParseError(ErrorKind::Syntax, cur_.pos, "unexpected '" + cur_.text + "'");
  }

  Connective take_conn() {
    if (!sig_.has(cur_.conn))
      throw ParseError(ErrorKind::UnknownConnective, cur_.pos,
                       "connective '" + cur_.text + "' is not in the signature");
    Connective c = cur_.conn;
    advance();
    return c;
  }

  bool at_level(int lvl) const {
    return cur_.kind == Tok::Conn && arity(cur_.conn) == 2 && level_of(cur_.conn) == lvl;
  }

  Formula parse_impl() {
    Formula lhs = parse_or();
    if (!at_level(kImpl)) return lhs;
    Connective c = take_conn();
    return Formula::binary(c, std::move(lhs), parse_impl());
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (at_level(kOr)) {
      Connective c = take_conn();
      lhs = Formula::binary(c, std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (at_level(kAnd)) {
      Connective c = take_conn();
      lhs = Formula::binary(c, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (cur_.kind == Tok::Conn && arity(cur_.conn) == 1) {
      Connective c = take_conn();
      return Formula::unary(c, parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.text);
        advance();
        return f;
      }
      case Tok::Const: {
        if (!sig_.constants())
          throw ParseError(ErrorKind::UnknownConnective, cur_.pos,
                           "constant '" + cur_.text + "' is not enabled");
        Formula f = Formula::constant(cur_.constant);
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Formula f = parse_impl();
        if (cur_.kind != Tok::RParen)
          throw ParseError(ErrorKind::Syntax, cur_.pos, "expected ')'");
        advance();
        return f;
      }
      case Tok::End:
        throw ParseError(ErrorKind::Syntax, cur_.pos, "unexpected end of input");
      default:
        throw ParseError(ErrorKind::Syntax, cur_.pos, "unexpected '" + cur_.text + "'");
    }
  }

  Lexer lex_;
  const Signature& sig_;
  Token cur_;
};

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Constant:
      out += f.constant_kind() == ConstantKind::Top      ? "T"
             : f.constant_kind() == ConstantKind::Bottom ? "F"
                                                         : "U";
      return;
    case Formula::Kind::Compound:
      break;
  }
  auto sub = [&](const Formula& g, bool parens) {
    if (parens) out += '(';
    render_into(g, out);
    if (parens) out += ')';
  };
  Connective c = f.connective();
  if (arity(c) == 1) {
    out += token(c);
    if (c != Connective::Neg) out += ' ';
    sub(f.arg(0), level_of(f.arg(0)) < kUnary);
    return;
  }
  int lvl = level_of(c);
  bool right_assoc = lvl == kImpl;
  sub(f.arg(0), right_assoc ? level_of(f.arg(0)) <= lvl : level_of(f.arg(0)) < lvl);
  out += ' ';
  out += token(c);
  out += ' ';
  sub(f.arg(1), right_assoc ? level_of(f.arg(1)) < lvl : level_of(f.arg(1)) <= lvl);
}

}  // namespace

int arity(Connective c) { return kConn[static_cast<int>(c)].arity; }
std::string_view token(Connective c) { return kConn[static_cast<int>(c)].token; }
std::string_view role_name(Connective c) { return kConn[static_cast<int>(c)].role; }

std::optional<Connective> connective_from_role(std::string_view role) {
  for (const auto& ci : kConn)
    if (ci.role == role) return ci.c;
  return std::nullopt;
}

Signature::Signature(std::initializer_list<Connective> cs, bool constants)
    : constants_(constants) {
  for (Connective c : cs) add(c);
}

Signature Signature::all() {
  Signature s;
  for (const auto& ci : kConn) s.add(ci.c);
  s.set_constants(true);
  return s;
}

std::vector<Connective> Signature::connectives() const {
  std::vector<Connective> out;
  for (const auto& ci : kConn)
    if (has(ci.c)) out.push_back(ci.c);
  return out;
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name) || is_reserved(name))
    throw Error(ErrorKind::Syntax, "invalid atom name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->hash = mix(0x51, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::constant(ConstantKind k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->constant = k;
  n->hash = mix(0x77, static_cast<std::size_t>(k));
  return Formula(std::move(n));
}

Formula Formula::compound(Connective c, std::vector<Formula> args) {
  if (static_cast<int>(args.size()) != arity(c))
    throw Error(ErrorKind::Precondition, "arity mismatch for '" + std::string(token(c)) + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compound;
  n->connective = c;
  n->complexity = 1;
  n->hash = mix(0x1234, static_cast<std::size_t>(c));
  for (const auto& a : args) {
    n->complexity += a.complexity();
    n->hash = mix(n->hash, a.hash());
  }
  n->args = std::move(args);
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind ||
      a.node_->complexity != b.node_->complexity)
    return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() == b.name();
    case Formula::Kind::Constant:
      return a.constant_kind() == b.constant_kind();
    case Formula::Kind::Compound:
      return a.connective() == b.connective() && a.args() == b.args();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.complexity() <=> b.complexity(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() <=> b.name();
    case Formula::Kind::Constant:
      return a.constant_kind() <=> b.constant_kind();
    case Formula::Kind::Compound:
      if (auto c = a.connective() <=> b.connective(); c != 0) return c;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (auto c = a.arg(i) <=> b.arg(i); c != 0) return c;
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig).parse_all();
}

std::vector<Formula> parse_formula_list(std::string_view text, const Signature& sig) {
  return Parser(text, sig).parse_list();
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.name());
    return;
  }
  for (const auto& a : f.args()) collect_atoms(a, out);
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

int complexity(const Formula& f) { return f.complexity(); }

bool is_reserved(std::string_view s) {
  if (s == "T" || s == "F" || s == "U") return true;
  for (const auto& ci : kConn)
    if (ci.token == s) return true;
  return false;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

}  // namespace bsc
